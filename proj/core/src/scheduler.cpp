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

#include <fmt/format.h>

#include "rydrep/errors.hpp"
#include "rydrep/scheduler.hpp"

namespace rydrep::schedule {

std::string_view to_string(MoveAccounting m) {
  return m == MoveAccounting::Averaged ? "averaged" : "explicit";
}

void StageParams::validate() const {
  if (!(t_swap_us > 0.0 && t_move_us > 0.0 && t_proj_us > 0.0)) {
    throw InvalidArgument("stage durations must be positive");
  }
  if (!(p_move > 0.0 && p_move <= 1.0)) throw InvalidArgument("p_move must lie in (0, 1]");
  if (!(f_move > 0.25 && f_move <= 1.0)) throw InvalidArgument("f_move must lie in (0.25, 1]");
  if (parallel_links < 1) throw InvalidArgument("parallel_links must be >= 1");
}

OperationTimings OperationTimings::for_link(const link::CavityParams& cavity, const link::LinkParams& lp,
                                            const StageParams& stages) {
  stages.validate();
  OperationTimings t;
  t.t_esta_us = link::expected_esta(cavity, lp).t_esta_us;
  t.t_swap_us = stages.t_swap_us;
  t.t_move_us = stages.t_move_us;
  t.t_proj_us = stages.t_proj_us;
  t.p_move = stages.p_move;
  t.classical_delay_us = lp.length_km / lp.c_km_per_us;
  t.move_accounting = stages.move_accounting;
  t.parallel_links = stages.parallel_links;
  return t;
}

double OperationTimings::pair_stage_us() const {
  const double stage = std::max(t_esta_us + t_swap_us, t_swap_us + t_move_us);
  return move_accounting == MoveAccounting::Explicit ? stage / p_move : stage;
}

void OperationTimings::validate() const {
  if (!(t_esta_us > 0.0 && t_swap_us > 0.0 && t_move_us > 0.0 && t_proj_us > 0.0)) {
    throw InvalidArgument("operation durations must be positive");
  }
  if (!(p_move > 0.0 && p_move <= 1.0)) throw InvalidArgument("p_move must lie in (0, 1]");
  if (!(classical_delay_us >= 0.0)) throw InvalidArgument("classical delay must be nonnegative");
  if (parallel_links < 1) throw InvalidArgument("parallel_links must be >= 1");
}

double t_puri(double t_proj_us, double p_puri) {
  if (!(p_puri > 0.0 && p_puri <= 1.0)) {
    throw InvalidArgument(fmt::format("p_puri = {} must lie in (0, 1]", p_puri));
  }
  return t_proj_us / p_puri;
}

ScheduleResult t_eg(int n, const OperationTimings& timings, std::span<const double> per_round_p_puri) {
  if (n < 0) throw InvalidArgument("number of rounds must be >= 0");
  if (per_round_p_puri.size() < static_cast<std::size_t>(n)) {
    throw InvalidArgument(
        fmt::format("t_eg needs {} purification success probabilities, got {}", n, per_round_p_puri.size()));
  }
  timings.validate();
  ScheduleResult r;
  r.n_rounds = n;
  const double copies = std::ldexp(1.0, n);
  r.generation_us = copies * timings.pair_stage_us();
  for (int k = 0; k < n; ++k) {
    r.purification_us += t_puri(timings.t_proj_us, per_round_p_puri[k]) + timings.classical_delay_us;
  }
  r.t_eg_us = std::max(r.generation_us, r.purification_us);
  r.effective_rate_hz = timings.parallel_links * 1e6 / r.t_eg_us;
  r.pairs_consumed = copies / timings.p_move;
  return r;
}

int generation_crossover(int n_max, const OperationTimings& timings, std::span<const double> per_round_p_puri) {
  for (int n = 1; n <= n_max; ++n) {
    const ScheduleResult r = t_eg(n, timings, per_round_p_puri);
    if (r.generation_us >= r.purification_us) return n;
  }
  return -1;
}

double calibrate_t_proj(double target_rate_hz, int n, const OperationTimings& timings,
                        std::span<const double> per_round_p_puri) {
  if (n < 1) throw InvalidArgument("calibration needs at least one purification round");
  if (!(target_rate_hz > 0.0)) throw InvalidArgument("target rate must be positive");
  if (per_round_p_puri.size() < static_cast<std::size_t>(n)) {
    throw InvalidArgument("calibration needs one success probability per round");
  }
  const double required_us = timings.parallel_links * 1e6 / target_rate_hz;
  double inverse_sum = 0.0;
  for (int k = 0; k < n; ++k) inverse_sum += 1.0 / per_round_p_puri[k];
  const double t_proj = (required_us - n * timings.classical_delay_us) / inverse_sum;
  const double generation = std::ldexp(1.0, n) * timings.pair_stage_us();
  if (!(t_proj > 0.0) || generation > required_us) {
    throw InvalidArgument(fmt::format(
        "rate {} Hz at N = {} is generation-limited ({} us per batch); t_proj cannot set it", target_rate_hz, n,
        generation));
  }
  return t_proj;
}

DensityMatrix qc_zone_initial_state(const link::LinkParams& lp, const noise::GateNoiseParams& noise,
                                    double f_move) {
  // (comm_a, comm_b, shuttle_b): the e-bit half at node b moves to the shuttle.
  const DensityMatrix heralded = link::heralded_state(lp);
  DensityMatrix joint = tensor(heralded, DensityMatrix::computational(1, 0));
  joint = noise::swap_gate(joint, 1, 2, noise.f_op);
  const DensityMatrix on_shuttle = partial_trace(joint, {0, 2});
  return noise::transport_channel(on_shuttle, 1, f_move);
}

std::vector<CurvePoint> rate_fidelity_curve(int n_max, const DensityMatrix& initial,
                                            const noise::GateNoiseParams& noise, const OperationTimings& timings,
                                            purification::Protocol protocol) {
  if (n_max < 0 || n_max > kMaxCurveRounds) {
    throw InvalidArgument(fmt::format("n_max must lie in [0, {}]", kMaxCurveRounds));
  }
  const auto schedule = purification::purify_n_rounds(initial, n_max, noise, protocol);
  const auto probabilities = schedule.success_probabilities();
  std::vector<CurvePoint> curve;
  curve.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const ScheduleResult r = t_eg(n, timings, probabilities);
    CurvePoint p;
    p.n = n;
    p.fidelity = schedule.fidelity_after(n);
    p.p_puri = n == 0 ? 1.0 : probabilities[n - 1];
    p.t_eg_us = r.t_eg_us;
    p.rate_hz = r.effective_rate_hz;
    curve.push_back(p);
  }
  return curve;
}

std::vector<CurvePoint> rate_fidelity_curve(int n_max, const link::CavityParams& cavity, const link::LinkParams& lp,
                                            const noise::GateNoiseParams& noise, const StageParams& stages,
                                            purification::Protocol protocol) {
  const OperationTimings timings = OperationTimings::for_link(cavity, lp, stages);
  return rate_fidelity_curve(n_max, qc_zone_initial_state(lp, noise, stages.f_move), noise, timings, protocol);
}

}  // namespace rydrep::schedule
