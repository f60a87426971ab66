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

// End-to-end entanglement over a chain of M stations: per-link purification,
// log2(M - 1) levels of parallel entanglement swapping, purification of the
// end-to-end pairs, and the (N1, N2) search that minimizes total time under
// a fidelity target.

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rydrep/bell.hpp"
#include "rydrep/hardware.hpp"
#include "rydrep/quantum.hpp"

namespace rydrep::chain {

inline constexpr int kMaxSearchRounds = 10;

struct ChainParams {
  /// M; M - 1 must be a power of two.
  int m_stations = 2;
  double total_length_km = 0.1;
  double fidelity_target = 0.99;
  /// N1 and N2 are searched over [0, max_rounds].
  int max_rounds = 8;

  void validate() const;
  int swap_levels() const;
  double link_length_km() const { return total_length_km / (m_stations - 1); }
};

struct BellMeasurementBranch {
  int first = 0;   // readout of mid_1 after the Hadamard
  int second = 0;  // readout of mid_2
  double probability = 0.0;
  /// End-to-end pair after the outcome's Pauli correction on end_b.
  DensityMatrix corrected_state;
};

struct BellMeasurementResult {
  /// Probability-weighted mixture of the corrected branches.
  DensityMatrix state;
  std::vector<BellMeasurementBranch> branches;
};

/// Qubits ordered (end_a, mid_1, mid_2, end_b). Noisy CNOT(mid_1 -> mid_2),
/// ideal Hadamard on mid_1, flip-error readout of both middle qubits, then
/// the Pauli feed-forward that returns Psi+ (x) Psi+ to Psi+.
BellMeasurementResult bell_measurement(const DensityMatrix& two_pairs, const noise::GateNoiseParams& params);

/// m levels of pairwise swapping over identical links.
DensityMatrix swap_chain(const ChainParams& chain, const DensityMatrix& per_link_state,
                         const noise::GateNoiseParams& params);

/// Swapping in the Bell-diagonal picture: labels compose by XOR in the
/// Psi+ frame, a mid_1 readout flip adds a phase error, a mid_2 flip adds a
/// bit error, and gate noise leaves the end pair maximally mixed.
BellDiagonalState swap_bell_diagonal(const BellDiagonalState& left, const BellDiagonalState& right,
                                     const noise::GateNoiseParams& params);

/// L / (2c) + t_proj.
double t_repe(double total_length_km, double t_proj_us, double c_km_per_us = link::kSpeedOfLight);

struct ChainPlan {
  int m_stations = 2;
  double total_length_km = 0.0;
  bool fc_enabled = false;
  link::HeraldMode herald_mode = link::HeraldMode::Serial;
  link::EstaConvention esta_convention = link::EstaConvention::Text;
  double fidelity_target = 0.0;

  bool feasible = false;
  int n1 = -1;
  int n2 = -1;
  double f_m = 0.0;
  double t_qr_us = 0.0;
  double rate_hz = 0.0;
  /// Highest end-to-end fidelity over the whole search range.
  double best_achievable_fidelity = 0.0;
  /// Time to deliver one end-to-end pair (T_EG,N1 + T_repe).
  double t_pair_us = 0.0;
  double link_p_succ = 0.0;
  double link_t_esta_us = 0.0;
};

/// Caches the fidelity / success-probability sequences, which depend only on
/// the noise parameters and the number of swap levels, so sweeps over
/// distance reuse them.
class ChainPlanner {
 public:
  explicit ChainPlanner(HardwareParams hw);

  const HardwareParams& hardware() const { return hw_; }

  /// Uses hardware().link.fc_enabled.
  ChainPlan optimize(const ChainParams& chain);
  ChainPlan optimize(const ChainParams& chain, bool fc_enabled);

  /// Purification sequence of length kMaxSearchRounds.
  struct Sequence {
    std::vector<DensityMatrix> states;  // after k rounds, k = 0..R
    std::vector<double> fidelity;       // after k rounds
    std::vector<double> p_puri;         // success of round k + 1
  };

  /// Per-link pairs as delivered to the QC zone, purified 0..R times.
  const Sequence& link_sequence();
  /// End-to-end pairs after `levels` swap levels over links purified n1
  /// times, purified 0..R more times.
  const Sequence& chain_sequence(int levels, int n1);

 private:
  Sequence purify_sequence(const DensityMatrix& start) const;

  HardwareParams hw_;
  std::optional<Sequence> link_sequence_;
  std::map<std::pair<int, int>, Sequence> chain_sequences_;
};

ChainPlan optimize_plan(const ChainParams& chain, const HardwareParams& hw);

/// One plan per (distance, stations, fc) grid point, ordered by
/// (distance, stations, fc). Infeasible points carry rate 0.
std::vector<ChainPlan> rate_vs_distance(const ChainParams& chain_template, std::span<const double> distances_km,
                                        std::span<const int> stations, const std::vector<bool>& fc_settings,
                                        const HardwareParams& hw);

}  // namespace rydrep::chain
