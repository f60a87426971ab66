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

#include <fmt/format.h>

#include "rydrep/audit.hpp"
#include "rydrep/channel.hpp"
#include "rydrep/errors.hpp"

namespace rydrep {

KrausChannel::KrausChannel(int n_qubits, std::vector<CMatrix> operators)
    : n_qubits_(n_qubits), operators_(std::move(operators)) {}

KrausChannel KrausChannel::create(std::vector<CMatrix> operators, double tol) {
  if (operators.empty()) throw InvalidArgument("Kraus channel needs at least one operator");
  const Eigen::Index d = operators.front().rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if ((Eigen::Index{1} << n) != d || n < 1 || n > kMaxQubits) {
    throw InvalidArgument(fmt::format("Kraus operator dimension {} is not 2^n with 1 <= n <= {}", d, kMaxQubits));
  }
  for (const CMatrix& k : operators) {
    if (k.rows() != d || k.cols() != d) throw InvalidArgument("Kraus operators must share one square shape");
  }
  KrausChannel channel(n, std::move(operators));
  const double tp = channel.trace_preservation_error();
  if (tp > tol) {
    throw PhysicalityError(fmt::format("channel is not trace preserving (error {:.3g})", tp));
  }
  PhysicalityAudit::record(channel);
  return channel;
}

KrausChannel KrausChannel::identity(int n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return create({CMatrix::Identity(d, d)});
}

KrausChannel KrausChannel::unitary(const CMatrix& u) { return create({u}); }

CMatrix KrausChannel::choi() const {
  const Eigen::Index d = operators_.front().rows();
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (const CMatrix& k : operators_) {
    CVector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index a = 0; a < d; ++a) v(i * d + a) = k(a, i);
    }
    c += v * v.adjoint();
  }
  return c;
}

double KrausChannel::trace_preservation_error() const {
  const Eigen::Index d = operators_.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const CMatrix& k : operators_) sum += k.adjoint() * k;
  return (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

double KrausChannel::choi_min_eigenvalue() const {
  const CMatrix c = choi();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (c + c.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool KrausChannel::is_cptp(double tol) const {
  return trace_preservation_error() <= tol && choi_min_eigenvalue() >= -tol;
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho, std::span<const int> qubits) const {
  if (static_cast<int>(qubits.size()) != n_qubits_) {
    throw InvalidArgument(
        fmt::format("channel acts on {} qubits but {} were given", n_qubits_, qubits.size()));
  }
  CMatrix acc = CMatrix::Zero(rho.dim(), rho.dim());
  for (const CMatrix& k : operators_) {
    const CMatrix full = embed_operator(k, qubits, rho.num_qubits());
    acc.noalias() += full * rho.matrix() * full.adjoint();
  }
  return detail::adopt(std::move(acc));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel, std::span<const int> qubits) {
  return channel.apply(rho, qubits);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel,
                            std::initializer_list<int> qubits) {
  return channel.apply(rho, std::span<const int>(qubits.begin(), qubits.size()));
}

}  // namespace rydrep
