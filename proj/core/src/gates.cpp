// Copyright 2026 The rydrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "rydrep/errors.hpp"
#include "rydrep/gates.hpp"

namespace rydrep::gates {

CMatrix identity(int n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return CMatrix::Identity(d, d);
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix hadamard() {
  CMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

CMatrix rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  CMatrix m(2, 2);
  m << c, Complex(0, -s), Complex(0, -s), c;
  return m;
}

CMatrix cnot() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

CMatrix cz() {
  CMatrix m = CMatrix::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

CMatrix projector(int bit) {
  if (bit != 0 && bit != 1) throw InvalidArgument("projector: bit must be 0 or 1");
  CMatrix m = CMatrix::Zero(2, 2);
  m(bit, bit) = 1;
  return m;
}

}  // namespace rydrep::gates
