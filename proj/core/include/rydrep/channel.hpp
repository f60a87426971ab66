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

#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "rydrep/quantum.hpp"

namespace rydrep {

/// Completely positive trace-preserving map in Kraus form on 1..4 qubits.
class KrausChannel {
 public:
  /// Validates square, equal-size, power-of-two operators and trace
  /// preservation (sum K^dag K = I within `tol`); throws on violation.
  static KrausChannel create(std::vector<CMatrix> operators, double tol = kPhysicalTol);
  static KrausChannel identity(int n_qubits);
  static KrausChannel unitary(const CMatrix& u);

  int num_qubits() const { return n_qubits_; }
  const std::vector<CMatrix>& operators() const { return operators_; }

  /// Choi matrix sum_ij |i><j| (x) E(|i><j|), first factor is the input copy.
  CMatrix choi() const;
  /// max |sum K^dag K - I| entrywise.
  double trace_preservation_error() const;
  double choi_min_eigenvalue() const;
  bool is_cptp(double tol = kPhysicalTol) const;

  /// sum_i K_i rho K_i^dag with the channel acting on `qubits` in order.
  DensityMatrix apply(const DensityMatrix& rho, std::span<const int> qubits) const;

 private:
  KrausChannel(int n_qubits, std::vector<CMatrix> operators);

  int n_qubits_ = 0;
  std::vector<CMatrix> operators_;
};

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel,
                            std::span<const int> qubits);
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel,
                            std::initializer_list<int> qubits);

}  // namespace rydrep
