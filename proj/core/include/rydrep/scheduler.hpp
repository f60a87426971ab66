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

// Assembly-line timing of e-bit generation and nested purification.
//
// Every stage of the pipeline (herald, swap to shuttle, move, purify) can
// run concurrently on different e-bits, so the time for N rounds is set by
// whichever is slower: producing 2^N raw pairs back to back, or running the
// N purification readouts with their classical signalling.

#include <span>
#include <string_view>
#include <vector>

#include "rydrep/cavity_link.hpp"
#include "rydrep/noise.hpp"
#include "rydrep/purification.hpp"

namespace rydrep::schedule {

/// Averaged: t_move is already the mean duration including retries.
/// Explicit: the per-pair stage time is divided by p_move.
enum class MoveAccounting { Averaged, Explicit };

std::string_view to_string(MoveAccounting m);

struct StageParams {
  double t_swap_us = 2.0;
  double t_move_us = 20.0;
  /// Single-atom readout duration. 200 us puts the two-node rate at N = 4
  /// near 1.1 kHz; calibrate_t_proj solves for it exactly.
  double t_proj_us = 200.0;
  double p_move = 0.9;
  double f_move = 0.96;
  MoveAccounting move_accounting = MoveAccounting::Averaged;
  int parallel_links = 1;

  void validate() const;
};

struct OperationTimings {
  double t_esta_us = 0.0;
  double t_swap_us = 2.0;
  double t_move_us = 20.0;
  double t_proj_us = 200.0;
  double p_move = 0.9;
  /// One-way classical signalling delay charged per purification round.
  double classical_delay_us = 0.0;
  MoveAccounting move_accounting = MoveAccounting::Averaged;
  int parallel_links = 1;

  static OperationTimings for_link(const link::CavityParams& cavity, const link::LinkParams& lp,
                                   const StageParams& stages);

  /// max(t_esta + t_swap, t_swap + t_move), divided by p_move when explicit.
  double pair_stage_us() const;
  void validate() const;
};

/// t_proj / p_puri.
double t_puri(double t_proj_us, double p_puri);

struct ScheduleResult {
  int n_rounds = 0;
  double generation_us = 0.0;
  double purification_us = 0.0;
  double t_eg_us = 0.0;
  double effective_rate_hz = 0.0;
  double final_fidelity = 0.0;
  /// Expected heralded pairs drawn per output pair, 2^N / p_move.
  double pairs_consumed = 0.0;

  bool purification_limited() const { return purification_us > generation_us; }
};

/// T_EG,N = max{ 2^N * pair_stage, sum_k (t_proj / p_k + classical_delay) }.
/// `per_round_p_puri` must hold at least n entries; the first n are used.
ScheduleResult t_eg(int n, const OperationTimings& timings, std::span<const double> per_round_p_puri);

/// Smallest N >= 1 at which the generation term catches up with the
/// purification term, or -1 if that does not happen for N <= n_max.
int generation_crossover(int n_max, const OperationTimings& timings, std::span<const double> per_round_p_puri);

/// Solves for the readout time that makes round n deliver `target_rate_hz`.
/// Throws InvalidArgument if the schedule is generation-limited at that rate.
double calibrate_t_proj(double target_rate_hz, int n, const OperationTimings& timings,
                        std::span<const double> per_round_p_puri);

/// Heralded e-bit, swapped from the communication atom to a fresh shuttle
/// at one node, then transported: the pair that reaches the QC zone.
DensityMatrix qc_zone_initial_state(const link::LinkParams& lp, const noise::GateNoiseParams& noise,
                                    double f_move);

struct CurvePoint {
  int n = 0;
  double fidelity = 0.0;
  /// Success probability of the last round (1 for N = 0).
  double p_puri = 1.0;
  double t_eg_us = 0.0;
  double rate_hz = 0.0;
};

std::vector<CurvePoint> rate_fidelity_curve(int n_max, const DensityMatrix& initial,
                                            const noise::GateNoiseParams& noise, const OperationTimings& timings,
                                            purification::Protocol protocol = purification::Protocol::Rotated);

/// Starts from qc_zone_initial_state of the given link.
std::vector<CurvePoint> rate_fidelity_curve(int n_max, const link::CavityParams& cavity, const link::LinkParams& lp,
                                            const noise::GateNoiseParams& noise, const StageParams& stages,
                                            purification::Protocol protocol = purification::Protocol::Rotated);

inline constexpr int kMaxCurveRounds = 10;

}  // namespace rydrep::schedule
