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
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rydrep/errors.hpp"
#include "rydrep/gates.hpp"
#include "rydrep/repeater_chain.hpp"

namespace rydrep::chain {
namespace {

using noise::GateNoiseParams;

HardwareParams pipelined() {
  HardwareParams hw;
  hw.link.herald_mode = link::HeraldMode::Pipelined;
  return hw;
}

ChainParams make_chain(int m, double l) {
  ChainParams c;
  c.m_stations = m;
  c.total_length_km = l;
  return c;
}

TEST(ChainParams, Validation) {
  EXPECT_NO_THROW(make_chain(3, 10).validate());
  EXPECT_NO_THROW(make_chain(17, 10).validate());
  EXPECT_THROW(make_chain(4, 10).validate(), InvalidArgument);
  EXPECT_THROW(make_chain(1, 10).validate(), InvalidArgument);
  EXPECT_THROW(make_chain(5, 0).validate(), InvalidArgument);
  auto c = make_chain(5, 10);
  c.max_rounds = kMaxSearchRounds + 1;
  EXPECT_THROW(c.validate(), InvalidArgument);
  EXPECT_EQ(make_chain(2, 1).swap_levels(), 0);
  EXPECT_EQ(make_chain(17, 1).swap_levels(), 4);
  EXPECT_DOUBLE_EQ(make_chain(5, 100).link_length_km(), 25.0);
}

TEST(BellMeasurement, IdealSwapOfPerfectPairsIsDeterministic) {
  const auto pairs = tensor(bell_state(Bell::PsiPlus), bell_state(Bell::PsiPlus));
  const auto r = bell_measurement(pairs, GateNoiseParams::ideal());
  ASSERT_EQ(r.branches.size(), 4u);
  for (const auto& b : r.branches) {
    EXPECT_NEAR(b.probability, 0.25, 1e-15);
    EXPECT_NEAR(fidelity_bell(b.corrected_state), 1.0, 1e-14) << b.first << b.second;
  }
  EXPECT_NEAR(fidelity_bell(r.state), 1.0, 1e-14);
  EXPECT_THROW(bell_measurement(bell_state(Bell::PsiPlus), GateNoiseParams{}), InvalidArgument);
}

TEST(BellMeasurement, BranchesAgreeAfterFeedForward) {
  // Every outcome carries the same corrected state for Werner inputs, so
  // the mixture equals each branch.
  for (double f : {0.8, 0.95}) {
    const auto r = bell_measurement(tensor(werner(f), werner(f)), GateNoiseParams::ideal());
    for (const auto& b : r.branches) {
      EXPECT_LT((b.corrected_state.matrix() - r.state.matrix()).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(BellMeasurement, IdealWernerSwapMatchesClosedForm) {
  for (double f : {0.8, 0.9, 0.95, 0.99}) {
    const auto out = swap_chain(make_chain(3, 10), werner(f), GateNoiseParams::ideal());
    EXPECT_NEAR(fidelity_bell(out), oracle::werner_swap(f), 1e-12);
  }
}

TEST(BellMeasurement, FrozenNoisyValues) {
  const auto r = bell_measurement(tensor(werner(0.9), werner(0.95)), GateNoiseParams{});
  EXPECT_NEAR(fidelity_bell(r.state), 0.8376169288888894, 1e-12);
  const auto m5 = swap_chain(make_chain(5, 10), werner(0.99), GateNoiseParams{});
  EXPECT_NEAR(fidelity_bell(m5), 0.8960894944376208, 1e-12);
  EXPECT_TRUE(m5.physicality().ok());
}

TEST(BellMeasurement, BellDiagonalFastPathMatchesFullSimulation) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const GateNoiseParams settings[] = {GateNoiseParams{}, GateNoiseParams{0.9, 0.93}, GateNoiseParams::ideal()};
  for (const auto& params : settings) {
    for (int trial = 0; trial < 8; ++trial) {
      std::array<double, 4> wa{}, wb{};
      for (int i = 0; i < 4; ++i) {
        wa[i] = u(rng);
        wb[i] = u(rng);
      }
      const double sa = wa[0] + wa[1] + wa[2] + wa[3], sb = wb[0] + wb[1] + wb[2] + wb[3];
      for (int i = 0; i < 4; ++i) {
        wa[i] /= sa;
        wb[i] /= sb;
      }
      const auto a = BellDiagonalState::from_weights(wa);
      const auto b = BellDiagonalState::from_weights(wb);
      const auto full = bell_measurement(tensor(a.to_density_matrix(), b.to_density_matrix()), params);
      const auto fast = swap_bell_diagonal(a, b, params);
      const auto dec = to_bell_diagonal(full.state);
      EXPECT_LT(dec.leakage, 1e-12);
      for (int i = 0; i < 4; ++i) EXPECT_NEAR(fast.weights[i], dec.state.weights[i], 1e-12);
    }
  }
}

TEST(Timing, RepeaterOverhead) {
  EXPECT_NEAR(t_repe(100.0, 200.0), 100.0 / (2 * link::kSpeedOfLight) + 200.0, 1e-12);
  EXPECT_THROW(t_repe(-1.0, 200.0), InvalidArgument);
}

TEST(Planner, SingleLinkUsesLinkPurificationOnly) {
  ChainPlanner planner(pipelined());
  const auto plan = planner.optimize(make_chain(2, 0.1));
  ASSERT_TRUE(plan.feasible);
  EXPECT_EQ(plan.n1, 4);
  EXPECT_EQ(plan.n2, 0);
  EXPECT_NEAR(plan.rate_hz, 1130.07903, 1e-4);
  EXPECT_NEAR(plan.f_m, 0.992256306426, 1e-11);
  EXPECT_DOUBLE_EQ(plan.t_qr_us, plan.t_pair_us);
}

TEST(Planner, FrozenAnchors) {
  ChainPlanner planner(pipelined());
  const auto a = planner.optimize(make_chain(5, 25), false);
  EXPECT_EQ(a.n1, 2);
  EXPECT_EQ(a.n2, 4);
  EXPECT_NEAR(a.rate_hz, 57.8217097, 1e-6);
  const auto b = planner.optimize(make_chain(17, 500), true);
  EXPECT_EQ(b.n1, 4);
  EXPECT_EQ(b.n2, 7);
  EXPECT_NEAR(b.rate_hz, 1.39570063, 1e-7);
  EXPECT_TRUE(b.fc_enabled);
  EXPECT_EQ(b.herald_mode, link::HeraldMode::Pipelined);
}

TEST(Planner, ExhaustiveSearchAgreesWithBruteForce) {
  // Recompute T_QR for every (N1, N2) from the public sequences.
  auto hw = pipelined();
  ChainPlanner planner(hw);
  const auto chain = make_chain(5, 40);
  const auto plan = planner.optimize(chain, false);

  auto lp = hw.link;
  lp.length_km = chain.link_length_km();
  const auto timings = schedule::OperationTimings::for_link(hw.cavity, lp, hw.stages);
  const double repe = t_repe(chain.total_length_km, hw.stages.t_proj_us);
  double best = std::numeric_limits<double>::infinity();
  for (int n1 = 0; n1 <= chain.max_rounds; ++n1) {
    const double t_pair = schedule::t_eg(n1, timings, planner.link_sequence().p_puri).t_eg_us + repe;
    const auto& seq = planner.chain_sequence(chain.swap_levels(), n1);
    for (int n2 = 0; n2 <= chain.max_rounds; ++n2) {
      if (seq.fidelity[n2] < chain.fidelity_target) continue;
      double readout = 0.0;
      for (int k = 0; k < n2; ++k) readout += hw.stages.t_proj_us / seq.p_puri[k] + chain.total_length_km / link::kSpeedOfLight;
      best = std::min(best, std::max(std::ldexp(1.0, n2) * t_pair, t_pair + readout));
    }
  }
  EXPECT_NEAR(plan.t_qr_us, best, 1e-9 * best);
}

TEST(Planner, InfeasibleTargetReportsBestFidelity) {
  ChainPlanner planner(HardwareParams{});
  auto chain = make_chain(5, 25);
  chain.fidelity_target = 0.999;
  const auto plan = planner.optimize(chain);
  EXPECT_FALSE(plan.feasible);
  EXPECT_EQ(plan.rate_hz, 0.0);
  EXPECT_NEAR(plan.best_achievable_fidelity, 0.993126706, 1e-8);
  EXPECT_LT(plan.best_achievable_fidelity, 0.999);
}

TEST(Planner, SequencesAreCachedAndConsistent) {
  ChainPlanner planner(HardwareParams{});
  const auto& a = planner.chain_sequence(2, 3);
  const auto& b = planner.chain_sequence(2, 3);
  EXPECT_EQ(&a, &b);
  EXPECT_EQ(a.fidelity.size(), static_cast<std::size_t>(kMaxSearchRounds + 1));
  EXPECT_EQ(a.p_puri.size(), static_cast<std::size_t>(kMaxSearchRounds));
  EXPECT_NEAR(planner.link_sequence().fidelity[0], 0.9121016593166669, 1e-12);
}

TEST(Sweep, OrderingAndMonotonicity) {
  const std::vector<double> distances = {100.0, 10.0, 50.0};
  const std::vector<int> stations = {17, 5};
  const auto rows = rate_vs_distance(ChainParams{}, distances, stations, {true, false}, pipelined());
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& p = rows[i - 1];
    const auto& q = rows[i];
    EXPECT_TRUE(std::tie(p.total_length_km, p.m_stations, p.fc_enabled) <
                std::tie(q.total_length_km, q.m_stations, q.fc_enabled));
  }
  for (const auto& r : rows) {
    if (r.feasible) EXPECT_GE(r.f_m, 0.99);
    EXPECT_GE(r.rate_hz, 0.0);
  }
  // For each (M, fc) the rate does not increase with distance.
  for (int m : stations) {
    for (bool fc : {false, true}) {
      double previous = std::numeric_limits<double>::infinity();
      for (const auto& r : rows) {
        if (r.m_stations != m || r.fc_enabled != fc) continue;
        EXPECT_LE(r.rate_hz, previous);
        previous = r.rate_hz;
      }
    }
  }
}

}  // namespace
}  // namespace rydrep::chain
