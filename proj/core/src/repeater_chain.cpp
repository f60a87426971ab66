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
#include <tuple>

#include <fmt/format.h>

#include "rydrep/errors.hpp"
#include "rydrep/gates.hpp"
#include "rydrep/repeater_chain.hpp"

namespace rydrep::chain {

void ChainParams::validate() const {
  if (m_stations < 2) throw InvalidArgument(fmt::format("chain needs M >= 2 stations, got {}", m_stations));
  const int links = m_stations - 1;
  if ((links & (links - 1)) != 0) {
    throw InvalidArgument(fmt::format("M - 1 must be a power of two (M = {})", m_stations));
  }
  if (!(total_length_km > 0.0)) throw InvalidArgument("total chain length must be positive");
  if (!(fidelity_target > 0.0 && fidelity_target <= 1.0)) {
    throw InvalidArgument("fidelity target must lie in (0, 1]");
  }
  if (max_rounds < 0 || max_rounds > kMaxSearchRounds) {
    throw InvalidArgument(fmt::format("search range must lie in [0, {}]", kMaxSearchRounds));
  }
}

int ChainParams::swap_levels() const {
  int levels = 0;
  while ((1 << levels) < m_stations - 1) ++levels;
  return levels;
}

namespace {

// Pauli feed-forward on end_b indexed by (first, second) readout.
CMatrix correction(int first, int second) {
  const CMatrix x = gates::pauli_x();
  const CMatrix z = gates::pauli_z();
  if (first == 0 && second == 0) return x;
  if (first == 0 && second == 1) return gates::identity(1);
  if (first == 1 && second == 0) return x * z;
  return z;
}

}  // namespace

BellMeasurementResult bell_measurement(const DensityMatrix& two_pairs, const noise::GateNoiseParams& params) {
  if (two_pairs.num_qubits() != 4) {
    throw InvalidArgument(fmt::format("Bell measurement expects (end_a, mid_1, mid_2, end_b), got {} qubits",
                                      two_pairs.num_qubits()));
  }
  params.validate();
  DensityMatrix rho = noise::noisy_two_qubit_gate(two_pairs, noise::TwoQubitGate::CNOT, 1, 2, params.f_op);
  rho = apply_unitary(rho, gates::hadamard(), {1});

  BellMeasurementResult result;
  std::vector<double> weights;
  std::vector<DensityMatrix> states;
  // After the first readout the qubits are (end_a, mid_2, end_b).
  for (const auto& a : noise::noisy_measure_z(rho, 1, params.eta_meas)) {
    for (const auto& b : noise::noisy_measure_z(a.post_state, 1, params.eta_meas)) {
      BellMeasurementBranch branch;
      branch.first = a.outcome;
      branch.second = b.outcome;
      branch.probability = a.probability * b.probability;
      branch.corrected_state = apply_unitary(b.post_state, correction(a.outcome, b.outcome), {1});
      if (branch.probability > 0.0) {
        weights.push_back(branch.probability);
        states.push_back(branch.corrected_state);
      }
      result.branches.push_back(std::move(branch));
    }
  }
  result.state = mix(weights, states);
  return result;
}

DensityMatrix swap_chain(const ChainParams& chain, const DensityMatrix& per_link_state,
                         const noise::GateNoiseParams& params) {
  chain.validate();
  if (per_link_state.num_qubits() != 2) throw InvalidArgument("per-link state must be a 2-qubit pair");
  DensityMatrix state = per_link_state;
  for (int level = 0; level < chain.swap_levels(); ++level) {
    state = bell_measurement(tensor(state, state), params).state;
  }
  return state;
}

BellDiagonalState swap_bell_diagonal(const BellDiagonalState& left, const BellDiagonalState& right,
                                     const noise::GateNoiseParams& params) {
  params.validate();
  constexpr int kPsiPlus = static_cast<int>(Bell::PsiPlus);
  const double q = 1.0 - params.eta_meas;
  const double eta = params.eta_meas;
  // Error label e = index ^ Psi+, i.e. (x, z) relative to Psi+.
  const std::array<double, 4> flip = {eta * eta, eta * q, eta * q, q * q};  // none, z, x, both
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int e = (i ^ kPsiPlus) ^ (j ^ kPsiPlus);
      for (int f = 0; f < 4; ++f) {
        out[(e ^ f) ^ kPsiPlus] += left.weights[i] * right.weights[j] * flip[f];
      }
    }
  }
  const double keep = params.f_op;
  BellDiagonalState s;
  for (int i = 0; i < 4; ++i) s.weights[i] = keep * out[i] + (1.0 - keep) / 4.0;
  return s;
}

double t_repe(double total_length_km, double t_proj_us, double c_km_per_us) {
  if (!(total_length_km >= 0.0)) throw InvalidArgument("length must be nonnegative");
  if (!(c_km_per_us > 0.0)) throw InvalidArgument("speed of light must be positive");
  return total_length_km / (2.0 * c_km_per_us) + t_proj_us;
}

ChainPlanner::ChainPlanner(HardwareParams hw) : hw_(std::move(hw)) { hw_.validate(); }

ChainPlanner::Sequence ChainPlanner::purify_sequence(const DensityMatrix& start) const {
  const auto schedule = purification::purify_n_rounds(start, kMaxSearchRounds, hw_.noise, hw_.protocol);
  Sequence seq;
  seq.states.push_back(start);
  seq.fidelity.push_back(fidelity_bell(start));
  for (const auto& round : schedule.rounds) {
    seq.states.push_back(round.output_state);
    seq.fidelity.push_back(round.output_fidelity);
    seq.p_puri.push_back(round.p_puri);
  }
  return seq;
}

const ChainPlanner::Sequence& ChainPlanner::link_sequence() {
  if (!link_sequence_) {
    link_sequence_ = purify_sequence(schedule::qc_zone_initial_state(hw_.link, hw_.noise, hw_.stages.f_move));
  }
  return *link_sequence_;
}

const ChainPlanner::Sequence& ChainPlanner::chain_sequence(int levels, int n1) {
  if (n1 < 0 || n1 > kMaxSearchRounds) throw InvalidArgument("n1 out of range");
  const auto key = std::make_pair(levels, n1);
  auto it = chain_sequences_.find(key);
  if (it != chain_sequences_.end()) return it->second;
  DensityMatrix state = link_sequence().states[n1];
  for (int level = 0; level < levels; ++level) {
    state = bell_measurement(tensor(state, state), hw_.noise).state;
  }
  return chain_sequences_.emplace(key, purify_sequence(state)).first->second;
}

ChainPlan ChainPlanner::optimize(const ChainParams& chain) { return optimize(chain, hw_.link.fc_enabled); }

ChainPlan ChainPlanner::optimize(const ChainParams& chain, bool fc_enabled) {
  chain.validate();
  link::LinkParams lp = hw_.link;
  lp.length_km = chain.link_length_km();
  lp.fc_enabled = fc_enabled;

  ChainPlan plan;
  plan.m_stations = chain.m_stations;
  plan.total_length_km = chain.total_length_km;
  plan.fc_enabled = fc_enabled;
  plan.herald_mode = lp.herald_mode;
  plan.esta_convention = lp.esta_convention;
  plan.fidelity_target = chain.fidelity_target;
  plan.link_p_succ = link::herald_success(hw_.cavity, lp);

  const schedule::OperationTimings link_timings = schedule::OperationTimings::for_link(hw_.cavity, lp, hw_.stages);
  plan.link_t_esta_us = link_timings.t_esta_us;

  const int levels = chain.swap_levels();
  const double repe = levels > 0 ? t_repe(chain.total_length_km, hw_.stages.t_proj_us, lp.c_km_per_us) : 0.0;
  const double end_to_end_delay = chain.total_length_km / lp.c_km_per_us;
  const Sequence& per_link = link_sequence();

  for (int n1 = 0; n1 <= chain.max_rounds; ++n1) {
    const double t1 = schedule::t_eg(n1, link_timings, per_link.p_puri).t_eg_us;
    const double t_pair = t1 + repe;
    const Sequence& end_to_end = chain_sequence(levels, n1);
    double purification_us = 0.0;
    for (int n2 = 0; n2 <= chain.max_rounds; ++n2) {
      if (n2 > 0) {
        purification_us += schedule::t_puri(hw_.stages.t_proj_us, end_to_end.p_puri[n2 - 1]) + end_to_end_delay;
      }
      const double fidelity = end_to_end.fidelity[n2];
      plan.best_achievable_fidelity = std::max(plan.best_achievable_fidelity, fidelity);
      if (fidelity < chain.fidelity_target) continue;
      // The first end-to-end pair costs t_pair; the remaining 2^N2 - 1 are
      // produced back to back while the N2 readouts run.
      const double extra = n2 == 0 ? 0.0 : std::max((std::ldexp(1.0, n2) - 1.0) * t_pair, purification_us);
      const double t_qr = t_pair + extra;
      if (!plan.feasible || t_qr < plan.t_qr_us) {
        plan.feasible = true;
        plan.n1 = n1;
        plan.n2 = n2;
        plan.f_m = fidelity;
        plan.t_qr_us = t_qr;
        plan.t_pair_us = t_pair;
      }
    }
  }
  plan.rate_hz = plan.feasible ? hw_.stages.parallel_links * 1e6 / plan.t_qr_us : 0.0;
  if (!plan.feasible) plan.f_m = plan.best_achievable_fidelity;
  return plan;
}

ChainPlan optimize_plan(const ChainParams& chain, const HardwareParams& hw) {
  ChainPlanner planner(hw);
  return planner.optimize(chain);
}

std::vector<ChainPlan> rate_vs_distance(const ChainParams& chain_template, std::span<const double> distances_km,
                                        std::span<const int> stations, const std::vector<bool>& fc_settings,
                                        const HardwareParams& hw) {
  ChainPlanner planner(hw);
  std::vector<ChainPlan> rows;
  rows.reserve(distances_km.size() * stations.size() * fc_settings.size());
  for (double distance : distances_km) {
    for (int m : stations) {
      for (bool fc : fc_settings) {
        ChainParams chain = chain_template;
        chain.total_length_km = distance;
        chain.m_stations = m;
        rows.push_back(planner.optimize(chain, fc));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ChainPlan& a, const ChainPlan& b) {
    return std::tie(a.total_length_km, a.m_stations, a.fc_enabled) <
           std::tie(b.total_length_km, b.m_stations, b.fc_enabled);
  });
  return rows;
}

}  // namespace rydrep::chain
