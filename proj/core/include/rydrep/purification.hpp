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

#include <string_view>
#include <vector>

#include "rydrep/bell.hpp"
#include "rydrep/noise.hpp"
#include "rydrep/quantum.hpp"

namespace rydrep::purification {

/// What happens to each input pair before the bilateral CNOTs.
enum class Protocol {
  /// Ideal bilateral Rx(+pi/2) at node a and Rx(-pi/2) at node b. Psi+ and
  /// Phi+ are fixed and the Phi-/Psi- weights are exchanged, so the phase
  /// error that parity detection cannot see is converted into one it can.
  Rotated,
  /// Depolarize each input to the Werner state of equal Psi+ fidelity.
  Twirled,
  /// Bare circuit.
  Plain,
};

std::string_view to_string(Protocol p);
Protocol protocol_from_string(std::string_view s);

struct PurificationRound {
  double input_fidelity = 0.0;
  DensityMatrix output_state;
  double p_puri = 0.0;
  double output_fidelity = 0.0;
};

struct PurificationSchedule {
  int n_rounds = 0;
  DensityMatrix initial_state;
  std::vector<PurificationRound> rounds;

  std::size_t pairs_consumed() const { return std::size_t{1} << n_rounds; }
  const DensityMatrix& final_state() const;
  double final_fidelity() const;
  /// Fidelity after k rounds, k = 0..n_rounds.
  double fidelity_after(int k) const;
  std::vector<double> success_probabilities() const;
};

/// One recurrence round. Qubits are laid out (kept_a, kept_b, sacrificed_a,
/// sacrificed_b); the kept qubit controls a noisy CNOT onto the sacrificed
/// qubit at each node, both sacrificed qubits are read out with flip error
/// and the round is accepted on equal outcomes.
/// Throws PurificationFailure when acceptance probability is below 1e-12.
PurificationRound purify_round(const DensityMatrix& kept, const DensityMatrix& sacrificed,
                               const noise::GateNoiseParams& params, Protocol protocol = Protocol::Rotated);

/// Round k purifies two copies of the round-(k-1) output.
PurificationSchedule purify_n_rounds(const DensityMatrix& initial, int n, const noise::GateNoiseParams& params,
                                     Protocol protocol = Protocol::Rotated);

/// Iterates purify_round from Psi+ until successive fidelities differ by
/// less than `tolerance`. Throws ConvergenceError after `max_iterations`.
double fixed_point_fidelity(const noise::GateNoiseParams& params, double tolerance = 1e-10,
                            Protocol protocol = Protocol::Rotated, int max_iterations = 64);

struct BellDiagonalRound {
  BellDiagonalState state;
  double p_puri = 0.0;
};

/// Same round on Bell-diagonal inputs, evaluated in the Pauli frame: a
/// Bell label is (x, z) with index 2x + z, the bilateral CNOT maps
/// (x_t, z_s) -> (x_t ^ x_s, z_s ^ z_t), and gate noise mixes the four
/// qubits to the uniform distribution with probability 1 - f_op^2.
BellDiagonalRound purify_round_bell_diagonal(const BellDiagonalState& kept, const BellDiagonalState& sacrificed,
                                             const noise::GateNoiseParams& params,
                                             Protocol protocol = Protocol::Rotated);

}  // namespace rydrep::purification
