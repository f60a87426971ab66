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

// Operation-level noise: depolarizing two-qubit gates, flip-error
// computational-basis readout, the three-CNOT swap and the transport
// channel applied to a moved qubit.

#include <array>

#include "rydrep/channel.hpp"
#include "rydrep/quantum.hpp"

namespace rydrep::noise {

struct GateNoiseParams {
  /// Probability that a two-qubit gate acts ideally; otherwise the gate pair
  /// is replaced by the maximally mixed state.
  double f_op = 0.995;
  /// Probability that a readout reports the true computational value.
  double eta_meas = 0.99;

  static GateNoiseParams ideal() { return {1.0, 1.0}; }
  void validate() const;
};

enum class TwoQubitGate { CZ, CNOT };

/// rho -> f rho + (1 - f) I/4 (x) tr_pair(rho) on a qubit pair, as 16 Pauli
/// Kraus operators.
KrausChannel two_qubit_depolarizing(double f_op);

/// rho -> p rho + (1 - p) I/2 (x) tr_q(rho) on one qubit.
KrausChannel single_qubit_depolarizing(double keep_probability);

/// Depolarizing channel on the moved qubit, tuned so that applying it to
/// one half of a perfect Psi+ leaves fidelity `f_move`.
KrausChannel transport_kraus(double f_move);

/// Ideal gate followed by two_qubit_depolarizing(f_op) on (control, target).
DensityMatrix noisy_two_qubit_gate(const DensityMatrix& rho, TwoQubitGate gate, int control, int target,
                                   double f_op);

struct MeasurementRecord {
  int outcome = 0;
  double probability = 0.0;
  /// Normalized state with the measured qubit removed.
  DensityMatrix post_state;
  /// Set when probability fell below 1e-15; post_state is then maximally mixed.
  bool degenerate = false;
};

/// Two-outcome POVM E_b = eta P_b + (1 - eta) P_(1-b) on `qubit`.
std::array<MeasurementRecord, 2> noisy_measure_z(const DensityMatrix& rho, int qubit, double eta_meas);

/// CNOT(a->b) CNOT(b->a) CNOT(a->b), each noisy.
DensityMatrix swap_gate(const DensityMatrix& rho, int a, int b, double f_op);

DensityMatrix transport_channel(const DensityMatrix& rho, int qubit, double f_move);

}  // namespace rydrep::noise
