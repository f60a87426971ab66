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
#include <numeric>

#include <fmt/format.h>

#include "rydrep/audit.hpp"
#include "rydrep/errors.hpp"
#include "rydrep/quantum.hpp"

namespace rydrep {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw InvalidArgument(fmt::format("matrix dimension {} is not a power of two", dim));
  }
  return n;
}

void check_qubit_list(std::span<const int> qubits, int n_qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits) {
      throw InvalidArgument(fmt::format("qubit index {} out of range for {} qubits", qubits[i], n_qubits));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw InvalidArgument(fmt::format("qubit index {} listed twice", qubits[i]));
      }
    }
  }
}

inline int bit_of(Eigen::Index index, int qubit, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1);
}

inline Eigen::Index with_bit(Eigen::Index index, int qubit, int n_qubits, int bit) {
  const Eigen::Index mask = Eigen::Index{1} << (n_qubits - 1 - qubit);
  return bit ? (index | mask) : (index & ~mask);
}

}  // namespace

DensityMatrix::DensityMatrix() : n_qubits_(0), matrix_(CMatrix::Ones(1, 1)) {}

DensityMatrix::DensityMatrix(int n_qubits, CMatrix m) : n_qubits_(n_qubits), matrix_(std::move(m)) {}

namespace detail {
DensityMatrix adopt(CMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("density matrix must be square");
  const int n = qubits_for_dim(m.rows());
  if (n > kMaxQubits) throw InvalidArgument(fmt::format("{} qubits exceeds the limit of {}", n, kMaxQubits));
  DensityMatrix rho(n, std::move(m));
  PhysicalityAudit::record(rho);
  return rho;
}
}  // namespace detail

DensityMatrix DensityMatrix::from_matrix(CMatrix m, double tol) {
  DensityMatrix rho = detail::adopt(std::move(m));
  const PhysicalityReport r = rho.physicality();
  if (!r.ok(tol)) {
    throw PhysicalityError(fmt::format("unphysical density matrix: trace error {:.3g}, hermiticity error {:.3g}, "
                                       "min eigenvalue {:.3g}",
                                       r.trace_error, r.hermiticity_error, r.min_eigenvalue));
  }
  return rho;
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw InvalidArgument("state vector has zero norm");
  const CVector v = psi / norm;
  return detail::adopt(v * v.adjoint());
}

DensityMatrix DensityMatrix::computational(int n_qubits, Eigen::Index index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw InvalidArgument("qubit count out of range");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  if (index < 0 || index >= d) throw InvalidArgument("basis index out of range");
  CMatrix m = CMatrix::Zero(d, d);
  m(index, index) = 1.0;
  return detail::adopt(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) throw InvalidArgument("qubit count out of range");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return detail::adopt(CMatrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

PhysicalityReport DensityMatrix::physicality() const {
  PhysicalityReport r;
  const Complex tr = matrix_.trace();
  r.trace_error = std::abs(tr - Complex{1.0, 0.0});
  r.hermiticity_error = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  const CMatrix herm = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = solver.eigenvalues().minCoeff();
  return r;
}

double DensityMatrix::distance(const DensityMatrix& other) const {
  if (dim() != other.dim()) throw InvalidArgument("dimension mismatch");
  return (matrix_ - other.matrix_).cwiseAbs().maxCoeff();
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxQubits) {
    throw InvalidArgument(fmt::format("tensor product of {} and {} qubits exceeds {}", a.num_qubits(),
                                      b.num_qubits(), kMaxQubits));
  }
  const Eigen::Index da = a.dim(), db = b.dim();
  CMatrix m(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      m.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return detail::adopt(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set is empty");
  check_qubit_list(keep, n);
  if (!std::is_sorted(keep.begin(), keep.end())) {
    throw InvalidArgument("partial_trace: keep set must be sorted ascending");
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  const int k = static_cast<int>(keep.size());
  const int t = static_cast<int>(traced.size());
  const Eigen::Index dk = Eigen::Index{1} << k;
  const Eigen::Index dt = Eigen::Index{1} << t;

  auto full_index = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
    Eigen::Index idx = 0;
    for (int p = 0; p < k; ++p) idx = with_bit(idx, keep[p], n, bit_of(kept_bits, p, k));
    for (int p = 0; p < t; ++p) idx = with_bit(idx, traced[p], n, bit_of(traced_bits, p, t));
    return idx;
  };

  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index s = 0; s < dt; ++s) acc += rho(full_index(i, s), full_index(j, s));
      out(i, j) = acc;
    }
  }
  return detail::adopt(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

CMatrix embed_operator(const CMatrix& op, std::span<const int> qubits, int n_qubits) {
  const int k = static_cast<int>(qubits.size());
  check_qubit_list(qubits, n_qubits);
  const Eigen::Index dk = Eigen::Index{1} << k;
  if (op.rows() != dk || op.cols() != dk) {
    throw InvalidArgument(fmt::format("operator of size {}x{} does not act on {} qubits", op.rows(), op.cols(), k));
  }
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  CMatrix full = CMatrix::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    Eigen::Index sub_in = 0;
    for (int p = 0; p < k; ++p) sub_in = (sub_in << 1) | bit_of(col, qubits[p], n_qubits);
    for (Eigen::Index sub_out = 0; sub_out < dk; ++sub_out) {
      const Complex amp = op(sub_out, sub_in);
      if (amp == Complex{0.0, 0.0}) continue;
      Eigen::Index row = col;
      for (int p = 0; p < k; ++p) row = with_bit(row, qubits[p], n_qubits, bit_of(sub_out, p, k));
      full(row, col) += amp;
    }
  }
  return full;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& u, std::span<const int> qubits) {
  const CMatrix full = embed_operator(u, qubits, rho.num_qubits());
  return detail::adopt(full * rho.matrix() * full.adjoint());
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& u, std::initializer_list<int> qubits) {
  return apply_unitary(rho, u, std::span<const int>(qubits.begin(), qubits.size()));
}

DensityMatrix mix(std::span<const double> weights, std::span<const DensityMatrix> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw InvalidArgument("mix: need one weight per state and at least one state");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidArgument("mix: weights must be nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("mix: weights sum to zero");
  CMatrix acc = CMatrix::Zero(states[0].dim(), states[0].dim());
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != acc.rows()) throw InvalidArgument("mix: dimension mismatch");
    acc += (weights[i] / total) * states[i].matrix();
  }
  return detail::adopt(std::move(acc));
}

InstrumentOutcome apply_instrument(const DensityMatrix& rho, const CMatrix& kraus, std::span<const int> qubits) {
  const CMatrix full = embed_operator(kraus, qubits, rho.num_qubits());
  CMatrix m = full * rho.matrix() * full.adjoint();
  const double p = m.trace().real();
  InstrumentOutcome out;
  if (p < kDegenerateProbability) {
    out.probability = 0.0;
    out.state = DensityMatrix::maximally_mixed(rho.num_qubits());
    out.degenerate = true;
    return out;
  }
  out.probability = p;
  out.state = detail::adopt(m / p);
  return out;
}

}  // namespace rydrep
