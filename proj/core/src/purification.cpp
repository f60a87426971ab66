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
#include <numbers>

#include <fmt/format.h>

#include "rydrep/errors.hpp"
#include "rydrep/gates.hpp"
#include "rydrep/purification.hpp"

namespace rydrep::purification {

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::Rotated: return "rotated";
    case Protocol::Twirled: return "twirled";
    case Protocol::Plain: return "plain";
  }
  return "?";
}

Protocol protocol_from_string(std::string_view s) {
  if (s == "rotated") return Protocol::Rotated;
  if (s == "twirled") return Protocol::Twirled;
  if (s == "plain") return Protocol::Plain;
  throw InvalidArgument(fmt::format("unknown purification protocol '{}'", s));
}

const DensityMatrix& PurificationSchedule::final_state() const {
  return rounds.empty() ? initial_state : rounds.back().output_state;
}

double PurificationSchedule::final_fidelity() const { return fidelity_bell(final_state()); }

double PurificationSchedule::fidelity_after(int k) const {
  if (k < 0 || k > n_rounds) throw InvalidArgument("round index out of range");
  return k == 0 ? fidelity_bell(initial_state) : rounds[k - 1].output_fidelity;
}

std::vector<double> PurificationSchedule::success_probabilities() const {
  std::vector<double> p;
  p.reserve(rounds.size());
  for (const auto& r : rounds) p.push_back(r.p_puri);
  return p;
}

namespace {

DensityMatrix prepare(const DensityMatrix& pair, Protocol protocol) {
  switch (protocol) {
    case Protocol::Rotated: {
      const DensityMatrix a = apply_unitary(pair, gates::rx(std::numbers::pi / 2), {0});
      return apply_unitary(a, gates::rx(-std::numbers::pi / 2), {1});
    }
    case Protocol::Twirled:
      return werner(std::clamp(fidelity_bell(pair), 0.25, 1.0));
    case Protocol::Plain:
      return pair;
  }
  return pair;
}

void require_pair(const DensityMatrix& rho, std::string_view role) {
  if (rho.num_qubits() != 2) {
    throw InvalidArgument(fmt::format("{} pair must be a 2-qubit state, got {} qubits", role, rho.num_qubits()));
  }
}

}  // namespace

PurificationRound purify_round(const DensityMatrix& kept, const DensityMatrix& sacrificed,
                               const noise::GateNoiseParams& params, Protocol protocol) {
  require_pair(kept, "kept");
  require_pair(sacrificed, "sacrificed");
  params.validate();

  DensityMatrix joint = tensor(prepare(kept, protocol), prepare(sacrificed, protocol));
  joint = noise::noisy_two_qubit_gate(joint, noise::TwoQubitGate::CNOT, 0, 2, params.f_op);
  joint = noise::noisy_two_qubit_gate(joint, noise::TwoQubitGate::CNOT, 1, 3, params.f_op);

  // Qubits after the first readout: (kept_a, kept_b, sacrificed_b).
  std::vector<double> weights;
  std::vector<DensityMatrix> accepted;
  double p_accept = 0.0;
  const auto first = noise::noisy_measure_z(joint, 2, params.eta_meas);
  for (const auto& a : first) {
    if (a.probability == 0.0) continue;
    const auto second = noise::noisy_measure_z(a.post_state, 2, params.eta_meas);
    const auto& b = second[a.outcome];
    const double p = a.probability * b.probability;
    if (p == 0.0) continue;
    p_accept += p;
    weights.push_back(p);
    accepted.push_back(b.post_state);
  }
  if (p_accept < 1e-12) {
    throw PurificationFailure(fmt::format("purification acceptance probability {:.3g} is degenerate", p_accept));
  }

  PurificationRound round;
  round.input_fidelity = fidelity_bell(kept);
  round.output_state = mix(weights, accepted);
  round.p_puri = p_accept;
  round.output_fidelity = fidelity_bell(round.output_state);
  return round;
}

PurificationSchedule purify_n_rounds(const DensityMatrix& initial, int n, const noise::GateNoiseParams& params,
                                     Protocol protocol) {
  if (n < 0) throw InvalidArgument("number of purification rounds must be >= 0");
  require_pair(initial, "initial");
  PurificationSchedule schedule;
  schedule.n_rounds = n;
  schedule.initial_state = initial;
  schedule.rounds.reserve(n);
  DensityMatrix current = initial;
  for (int k = 0; k < n; ++k) {
    PurificationRound round = purify_round(current, current, params, protocol);
    current = round.output_state;
    schedule.rounds.push_back(std::move(round));
  }
  return schedule;
}

double fixed_point_fidelity(const noise::GateNoiseParams& params, double tolerance, Protocol protocol,
                            int max_iterations) {
  DensityMatrix state = bell_state(Bell::PsiPlus);
  double previous = 1.0;
  for (int i = 0; i < max_iterations; ++i) {
    const PurificationRound round = purify_round(state, state, params, protocol);
    if (std::abs(round.output_fidelity - previous) < tolerance) return round.output_fidelity;
    previous = round.output_fidelity;
    state = round.output_state;
  }
  throw ConvergenceError(
      fmt::format("purification fixed point not reached within {} iterations (last F = {})", max_iterations,
                  previous));
}

BellDiagonalRound purify_round_bell_diagonal(const BellDiagonalState& kept, const BellDiagonalState& sacrificed,
                                             const noise::GateNoiseParams& params, Protocol protocol) {
  params.validate();
  auto prepare_weights = [&](const BellDiagonalState& s) {
    std::array<double, 4> w = s.weights;
    if (protocol == Protocol::Rotated) {
      std::swap(w[1], w[3]);
    } else if (protocol == Protocol::Twirled) {
      w = BellDiagonalState::werner(std::clamp(s.fidelity(), 0.25, 1.0)).weights;
    }
    return w;
  };
  const auto ws = prepare_weights(kept);
  const auto wt = prepare_weights(sacrificed);

  const double eta = params.eta_meas;
  const double accept_equal = eta * eta + (1.0 - eta) * (1.0 - eta);
  const double accept_differ = 2.0 * eta * (1.0 - eta);
  const double keep = params.f_op * params.f_op;

  std::array<double, 4> out{};
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      const int xs = s >> 1, zs = s & 1, xt = t >> 1, zt = t & 1;
      const int target_x = xt ^ xs;
      const int source = 2 * xs + (zs ^ zt);
      const double accept = target_x == 0 ? accept_equal : accept_differ;
      out[source] += keep * ws[s] * wt[t] * accept;
      // Depolarized branch: every (source, target) label equally likely.
      out[s] += (1.0 - keep) / 16.0 * ((t >> 1) == 0 ? accept_equal : accept_differ);
    }
  }
  double p = 0.0;
  for (double x : out) p += x;
  if (p < 1e-12) throw PurificationFailure("purification acceptance probability is degenerate");
  BellDiagonalRound r;
  for (int i = 0; i < 4; ++i) r.state.weights[i] = out[i] / p;
  r.p_puri = p;
  return r;
}

}  // namespace rydrep::purification
