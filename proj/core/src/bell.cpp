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

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rydrep/bell.hpp"
#include "rydrep/errors.hpp"

namespace rydrep {

std::string_view to_string(Bell b) {
  switch (b) {
    case Bell::PhiPlus: return "Phi+";
    case Bell::PhiMinus: return "Phi-";
    case Bell::PsiPlus: return "Psi+";
    case Bell::PsiMinus: return "Psi-";
  }
  return "?";
}

CVector bell_vector(Bell b) {
  const double s = 1.0 / std::sqrt(2.0);
  CVector v = CVector::Zero(4);
  switch (b) {
    case Bell::PhiPlus: v(0) = s; v(3) = s; break;
    case Bell::PhiMinus: v(0) = s; v(3) = -s; break;
    case Bell::PsiPlus: v(1) = s; v(2) = s; break;
    case Bell::PsiMinus: v(1) = s; v(2) = -s; break;
  }
  return v;
}

DensityMatrix bell_state(Bell b) { return DensityMatrix::pure(bell_vector(b)); }

double fidelity_bell(const DensityMatrix& rho, Bell b) {
  if (rho.num_qubits() != 2) {
    throw InvalidArgument(fmt::format("fidelity_bell needs a 2-qubit state, got {} qubits", rho.num_qubits()));
  }
  const CVector v = bell_vector(b);
  return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

DensityMatrix werner(double fidelity) {
  return BellDiagonalState::werner(fidelity).to_density_matrix();
}

BellDiagonalState BellDiagonalState::from_weights(std::array<double, 4> w) {
  double total = 0.0;
  for (double x : w) {
    if (!(x >= -kAlgebraTol && x <= 1.0 + kAlgebraTol)) {
      throw InvalidArgument(fmt::format("Bell weight {} outside [0, 1]", x));
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kAlgebraTol) {
    throw InvalidArgument(fmt::format("Bell weights sum to {}, not 1", total));
  }
  BellDiagonalState s;
  for (int i = 0; i < 4; ++i) s.weights[i] = std::clamp(w[i], 0.0, 1.0);
  return s;
}

BellDiagonalState BellDiagonalState::werner(double fidelity) {
  if (!(fidelity >= 0.25 && fidelity <= 1.0)) {
    throw InvalidArgument(fmt::format("Werner fidelity {} outside [0.25, 1]", fidelity));
  }
  const double other = (1.0 - fidelity) / 3.0;
  BellDiagonalState s;
  s.weights = {other, other, fidelity, other};
  return s;
}

DensityMatrix BellDiagonalState::to_density_matrix() const {
  CMatrix m = CMatrix::Zero(4, 4);
  for (Bell b : kAllBell) {
    const CVector v = bell_vector(b);
    m += (*this)[b] * (v * v.adjoint());
  }
  return DensityMatrix::from_matrix(std::move(m));
}

BellDecomposition to_bell_diagonal(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) {
    throw InvalidArgument(fmt::format("to_bell_diagonal needs a 2-qubit state, got {} qubits", rho.num_qubits()));
  }
  CMatrix basis(4, 4);
  for (Bell b : kAllBell) basis.col(static_cast<int>(b)) = bell_vector(b);
  const CMatrix in_bell = basis.adjoint() * rho.matrix() * basis;

  BellDecomposition out;
  std::array<double, 4> w{};
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    w[i] = std::max(0.0, in_bell(i, i).real());
    total += w[i];
  }
  for (int i = 0; i < 4; ++i) out.state.weights[i] = w[i] / total;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) out.leakage = std::max(out.leakage, std::abs(in_bell(i, j)));
    }
  }
  return out;
}

}  // namespace rydrep
