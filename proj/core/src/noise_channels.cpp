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
#include <vector>

#include <fmt/format.h>

#include "rydrep/errors.hpp"
#include "rydrep/gates.hpp"
#include "rydrep/noise.hpp"

namespace rydrep::noise {

void GateNoiseParams::validate() const {
  if (!(f_op > 0.25 && f_op <= 1.0)) {
    throw InvalidArgument(fmt::format("f_op = {} must lie in (0.25, 1]", f_op));
  }
  if (!(eta_meas > 0.5 && eta_meas <= 1.0)) {
    throw InvalidArgument(fmt::format("eta_meas = {} must lie in (0.5, 1]", eta_meas));
  }
}

namespace {

std::array<CMatrix, 4> paulis() {
  return {gates::identity(1), gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

}  // namespace

// The uniform Pauli twirl sum_P P rho P^dag / d^2 is the completely
// depolarizing map, so keeping weight f on the identity term yields
// f rho + (1 - f) I/d (x) tr(rho).
KrausChannel two_qubit_depolarizing(double f_op) {
  if (!(f_op >= 0.0 && f_op <= 1.0)) throw InvalidArgument("depolarizing keep probability outside [0, 1]");
  const auto p = paulis();
  std::vector<CMatrix> ops;
  ops.reserve(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double w = (i == 0 && j == 0) ? f_op + (1.0 - f_op) / 16.0 : (1.0 - f_op) / 16.0;
      if (w == 0.0) continue;
      ops.push_back(std::sqrt(w) * kron(p[i], p[j]));
    }
  }
  return KrausChannel::create(std::move(ops));
}

KrausChannel single_qubit_depolarizing(double keep_probability) {
  if (!(keep_probability >= 0.0 && keep_probability <= 1.0)) {
    throw InvalidArgument("depolarizing keep probability outside [0, 1]");
  }
  const auto p = paulis();
  std::vector<CMatrix> ops;
  for (int i = 0; i < 4; ++i) {
    const double w = (i == 0) ? keep_probability + (1.0 - keep_probability) / 4.0 : (1.0 - keep_probability) / 4.0;
    if (w == 0.0) continue;
    ops.push_back(std::sqrt(w) * p[i]);
  }
  return KrausChannel::create(std::move(ops));
}

// One-sided depolarizing with keep probability p on Psi+ gives
// p + (1 - p)/4, so p = (4 f - 1)/3.
KrausChannel transport_kraus(double f_move) {
  if (!(f_move > 0.25 && f_move <= 1.0)) {
    throw InvalidArgument(fmt::format("f_move = {} must lie in (0.25, 1]", f_move));
  }
  return single_qubit_depolarizing((4.0 * f_move - 1.0) / 3.0);
}

DensityMatrix noisy_two_qubit_gate(const DensityMatrix& rho, TwoQubitGate gate, int control, int target,
                                   double f_op) {
  if (control == target) throw InvalidArgument("two-qubit gate needs distinct control and target");
  if (!(f_op > 0.25 && f_op <= 1.0)) throw InvalidArgument(fmt::format("f_op = {} must lie in (0.25, 1]", f_op));
  const CMatrix u = gate == TwoQubitGate::CNOT ? gates::cnot() : gates::cz();
  const DensityMatrix ideal = apply_unitary(rho, u, {control, target});
  if (f_op == 1.0) return ideal;
  return apply_channel(ideal, two_qubit_depolarizing(f_op), {control, target});
}

std::array<MeasurementRecord, 2> noisy_measure_z(const DensityMatrix& rho, int qubit, double eta_meas) {
  if (!(eta_meas >= 0.0 && eta_meas <= 1.0)) throw InvalidArgument("eta_meas outside [0, 1]");
  const int n = rho.num_qubits();
  if (qubit < 0 || qubit >= n) throw InvalidArgument(fmt::format("qubit {} out of range", qubit));

  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    if (q != qubit) rest.push_back(q);
  }
  const int measured[] = {qubit};

  std::array<MeasurementRecord, 2> out;
  for (int b = 0; b < 2; ++b) {
    // sqrt(E_b) is diagonal in the computational basis.
    const CMatrix root = std::sqrt(eta_meas) * gates::projector(b) + std::sqrt(1.0 - eta_meas) * gates::projector(1 - b);
    InstrumentOutcome branch = apply_instrument(rho, root, measured);
    MeasurementRecord& rec = out[b];
    rec.outcome = b;
    rec.probability = branch.probability;
    rec.degenerate = branch.degenerate;
    if (rest.empty()) {
      rec.post_state = DensityMatrix();
    } else if (branch.degenerate) {
      rec.post_state = DensityMatrix::maximally_mixed(n - 1);
    } else {
      rec.post_state = partial_trace(branch.state, rest);
    }
  }
  return out;
}

DensityMatrix swap_gate(const DensityMatrix& rho, int a, int b, double f_op) {
  if (a == b) throw InvalidArgument("swap_gate needs distinct qubits");
  DensityMatrix out = noisy_two_qubit_gate(rho, TwoQubitGate::CNOT, a, b, f_op);
  out = noisy_two_qubit_gate(out, TwoQubitGate::CNOT, b, a, f_op);
  return noisy_two_qubit_gate(out, TwoQubitGate::CNOT, a, b, f_op);
}

DensityMatrix transport_channel(const DensityMatrix& rho, int qubit, double f_move) {
  const KrausChannel channel = transport_kraus(f_move);
  if (f_move == 1.0) return rho;
  return apply_channel(rho, channel, {qubit});
}

}  // namespace rydrep::noise
