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
#include <numbers>

#include <gtest/gtest.h>

#include "rydrep/bell.hpp"
#include "rydrep/cavity_link.hpp"
#include "rydrep/errors.hpp"

namespace rydrep::link {
namespace {

TEST(CavityParams, DerivedQuantities) {
  CavityParams p;
  EXPECT_NEAR(p.kappa_ex_mhz(), 3.8, 1e-15);
  EXPECT_NEAR(p.kappa_angular(), 2 * std::numbers::pi * 4.0, 1e-12);
  EXPECT_NEAR(20.0 / p.kappa_angular(), 0.795774715, 1e-9);
  EXPECT_NO_THROW(p.validate());
  p.kappa0_mhz = 5.0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = CavityParams{};
  p.gamma_mhz = 0.0;
  EXPECT_THROW(p.validate(), InvalidArgument);
}

TEST(Reflection, ClosedFormAtDefaults) {
  CavityParams p;
  const Complex r0 = reflection_amplitude(p, false);
  const Complex r1 = reflection_amplitude(p, true);
  EXPECT_NEAR(r0.real(), -0.9, 1e-15);
  EXPECT_NEAR(r1.real(), 1.0 - 2 * 3.8 / (4.0 + 4 * 7.6 * 7.6 / 3.0), 1e-15);
  EXPECT_NEAR(r0.imag(), 0.0, 1e-15);
  // Balanced design: equal magnitude, opposite sign.
  EXPECT_LT(std::abs(std::abs(r0) - std::abs(r1)), 0.01);
  EXPECT_LT(r0.real() * r1.real(), 0.0);
}

TEST(Reflection, CzAccounting) {
  CavityParams p;
  EXPECT_NEAR(cz_success(p, CzAccounting::Paper), 0.81, 1e-14);
  EXPECT_NEAR(cz_success(p, CzAccounting::PerCavity), 0.6561, 1e-14);
}

TEST(Transmission, LossBudget) {
  LinkParams lp;
  const double expected = std::pow(10.0, -0.3 / 10) * std::pow(10.0, -2.0 / 10) * 0.75;
  EXPECT_NEAR(link_transmission(lp), expected, 1e-14);

  // Same fiber loss on both wavelengths isolates the conversion factor.
  lp.fc_fiber_db_per_km = lp.fiber_db_per_km;
  const double off = link_transmission(lp);
  lp.fc_enabled = true;
  EXPECT_NEAR(link_transmission(lp) / off, 0.36, 1e-14);
}

TEST(Transmission, DecreasesWithLength) {
  CavityParams p;
  LinkParams lp;
  double previous = 1.0;
  for (double l : {0.1, 1.0, 10.0, 50.0}) {
    lp.length_km = l;
    const double s = herald_success(p, lp);
    EXPECT_LT(s, previous);
    EXPECT_GT(s, 0.0);
    previous = s;
  }
}

TEST(Esta, ConventionsAndModes) {
  CavityParams p;
  LinkParams lp;
  const double pulse = 20.0 / (2 * std::numbers::pi * 4.0);
  const double v = kSpeedOfLight / 1.5;
  const double flight = 0.1 / v;
  const double signal = 0.1 / kSpeedOfLight;
  const double succ = herald_success(p, lp);
  EXPECT_NEAR(succ, 0.357722521, 1e-9);

  const auto text = expected_esta(p, lp);
  EXPECT_NEAR(text.t_attempt_us, pulse + flight + signal, 1e-12);
  EXPECT_NEAR(text.t_esta_us, (pulse + flight + signal) / succ, 1e-12);
  EXPECT_NEAR(text.t_esta_us, 4.53, 0.1);

  lp.esta_convention = EstaConvention::Table;
  const auto table = expected_esta(p, lp);
  EXPECT_NEAR(table.t_esta_us, (pulse + flight) / succ, 1e-12);
  EXPECT_NEAR(table.t_esta_us, 3.62, 0.01);

  lp.esta_convention = EstaConvention::Text;
  lp.herald_mode = HeraldMode::Pipelined;
  EXPECT_NEAR(expected_esta(p, lp).t_esta_us, pulse / succ + flight + signal, 1e-12);
}

TEST(LinkParams, Validation) {
  LinkParams lp;
  EXPECT_NO_THROW(lp.validate());
  lp.detector_efficiency = 1.5;
  EXPECT_THROW(lp.validate(), InvalidArgument);
  lp = LinkParams{};
  lp.length_km = -1.0;
  EXPECT_THROW(lp.validate(), InvalidArgument);
  lp = LinkParams{};
  lp.n_circulators = -1;
  EXPECT_THROW(lp.validate(), InvalidArgument);
}

TEST(Budget, EvaluateLinkAtDefaults) {
  const auto b = evaluate_link(CavityParams{}, LinkParams{});
  EXPECT_NEAR(std::norm(b.r_uncoupled), 0.81, 1e-12);
  EXPECT_NEAR(b.p_succ, 0.36, 0.01);
  EXPECT_NEAR(b.rate_hz(), 221e3, 5e3);
  EXPECT_NEAR(fidelity_bell(b.heralded_state), 0.96, 1e-14);
  EXPECT_EQ(to_string(HeraldMode::Pipelined), "pipelined");
  EXPECT_EQ(to_string(CzAccounting::PerCavity), "per_cavity");
  EXPECT_EQ(to_string(EstaConvention::Table), "table");
}

}  // namespace
}  // namespace rydrep::link
