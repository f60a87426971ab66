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

// Dense density-matrix substrate for states of up to four qubits.
//
// Qubit ordering is big-endian throughout: in a basis index the bit of
// qubit 0 is the most significant, so |q0 q1 ... q(n-1)> maps to the
// integer q0*2^(n-1) + ... + q(n-1).

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rydrep {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 4;
/// Physicality tolerance (trace, Hermiticity, eigenvalues).
inline constexpr double kPhysicalTol = 1e-9;
/// Tolerance for exact algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;

struct PhysicalityReport {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;

  bool ok(double tol = kPhysicalTol) const {
    return trace_error <= tol && hermiticity_error <= tol && min_eigenvalue >= -tol;
  }
};

class DensityMatrix;

namespace detail {
/// Wraps a matrix the caller has produced by a physical map. Not validated
/// except under an active PhysicalityAudit.
DensityMatrix adopt(CMatrix m);
}  // namespace detail

/// Trace-one Hermitian PSD operator on 0..4 qubits. The zero-qubit case is
/// the scalar 1 left behind after every qubit has been measured out.
class DensityMatrix {
 public:
  /// The zero-qubit state (the scalar 1).
  DensityMatrix();

  /// Validates `m` against the physicality checks; throws PhysicalityError.
  static DensityMatrix from_matrix(CMatrix m, double tol = kPhysicalTol);
  static DensityMatrix pure(const CVector& psi);
  static DensityMatrix computational(int n_qubits, Eigen::Index index);
  static DensityMatrix maximally_mixed(int n_qubits);

  int num_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return matrix_(row, col); }

  double trace() const { return matrix_.trace().real(); }
  double purity() const;
  PhysicalityReport physicality() const;

  /// Largest entrywise |a - b|; requires equal dimensions.
  double distance(const DensityMatrix& other) const;

 private:
  DensityMatrix(int n_qubits, CMatrix m);
  friend DensityMatrix detail::adopt(CMatrix m);

  int n_qubits_ = 0;
  CMatrix matrix_;
};

/// Kronecker product; qubits of `a` come first. Total qubits must be <= 4.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (sorted ascending, in that order in the result).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Lift a k-qubit operator acting on `qubits` (in the listed order) to the
/// full n-qubit space.
CMatrix embed_operator(const CMatrix& op, std::span<const int> qubits, int n_qubits);

DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& u, std::span<const int> qubits);
DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& u,
                            std::initializer_list<int> qubits);

/// Convex combination; weights must be nonnegative and are renormalized.
DensityMatrix mix(std::span<const double> weights, std::span<const DensityMatrix> states);

/// One element K of a quantum instrument applied to `qubits`:
/// probability tr(K rho K^dag) and the normalized post-measurement state.
/// Branches with probability below 1e-15 are flagged degenerate and carry
/// the maximally mixed state.
struct InstrumentOutcome {
  double probability = 0.0;
  DensityMatrix state;
  bool degenerate = false;
};
InstrumentOutcome apply_instrument(const DensityMatrix& rho, const CMatrix& kraus,
                                   std::span<const int> qubits);

inline constexpr double kDegenerateProbability = 1e-15;

}  // namespace rydrep
