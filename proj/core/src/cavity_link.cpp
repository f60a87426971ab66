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

#include <fmt/format.h>

#include "rydrep/cavity_link.hpp"
#include "rydrep/errors.hpp"

namespace rydrep::link {

std::string_view to_string(HeraldMode m) { return m == HeraldMode::Serial ? "serial" : "pipelined"; }
std::string_view to_string(CzAccounting a) { return a == CzAccounting::Paper ? "paper" : "per_cavity"; }
std::string_view to_string(EstaConvention c) { return c == EstaConvention::Text ? "text" : "table"; }

namespace {

void require(bool ok, std::string_view what) {
  if (!ok) throw InvalidArgument(std::string(what));
}

double db_to_linear(double db) { return std::pow(10.0, -db / 10.0); }

}  // namespace

double CavityParams::kappa_angular() const { return 2.0 * std::numbers::pi * kappa_mhz; }

void CavityParams::validate() const {
  require(g_mhz > 0.0, "g must be positive");
  require(kappa_mhz > 0.0, "kappa must be positive");
  require(kappa0_mhz > 0.0, "kappa_0 must be positive");
  require(gamma_mhz > 0.0, "gamma must be positive");
  if (!(kappa0_mhz < kappa_mhz)) {
    throw InvalidArgument(
        fmt::format("kappa_0 < kappa violated (kappa_0 = {}, kappa = {})", kappa0_mhz, kappa_mhz));
  }
}

void LinkParams::validate() const {
  require(length_km > 0.0, "link length must be positive");
  require(fiber_db_per_km >= 0.0 && fc_fiber_db_per_km >= 0.0, "fiber attenuation must be nonnegative");
  require(circulator_loss_db >= 0.0, "circulator loss must be nonnegative");
  require(n_circulators >= 0, "circulator count must be nonnegative");
  require(detector_efficiency > 0.0 && detector_efficiency <= 1.0, "detector efficiency must lie in (0, 1]");
  require(eta_fc > 0.0 && eta_fc <= 1.0, "eta_fc must lie in (0, 1]");
  require(fiber_index >= 1.0, "fiber index must be >= 1");
  require(c_km_per_us > 0.0, "speed of light must be positive");
  require(pulse_factor > 0.0, "pulse factor must be positive");
  require(technical_fidelity > 0.25 && technical_fidelity <= 1.0, "technical fidelity must lie in (0.25, 1]");
}

Complex reflection_amplitude(const CavityParams& p, bool atom_coupled) {
  p.validate();
  const double kex = p.kappa_ex_mhz();
  double denom = p.kappa_mhz;
  if (atom_coupled) denom += 4.0 * p.g_mhz * p.g_mhz / p.gamma_mhz;
  return {1.0 - 2.0 * kex / denom, 0.0};
}

double cz_success(const CavityParams& p, CzAccounting accounting) {
  const double r2 = std::norm(reflection_amplitude(p, false));
  return accounting == CzAccounting::Paper ? r2 : r2 * r2;
}

double link_transmission(const LinkParams& lp) {
  lp.validate();
  double eta = db_to_linear(lp.attenuation_db_per_km() * lp.length_km);
  eta *= db_to_linear(lp.n_circulators * lp.circulator_loss_db);
  eta *= lp.detector_efficiency;
  if (lp.fc_enabled) eta *= lp.eta_fc * lp.eta_fc;
  return eta;
}

double herald_success(const CavityParams& p, const LinkParams& lp) {
  return cz_success(p, lp.cz_accounting) * link_transmission(lp);
}

EstaTiming expected_esta(const CavityParams& p, const LinkParams& lp) {
  const double p_succ = herald_success(p, lp);
  const double t_pulse = lp.pulse_factor / p.kappa_angular();
  const double flight = lp.length_km / lp.fiber_speed();
  const double signal = lp.esta_convention == EstaConvention::Text ? lp.length_km / lp.c_km_per_us : 0.0;

  EstaTiming t;
  t.t_attempt_us = t_pulse + flight + signal;
  t.t_esta_us = lp.herald_mode == HeraldMode::Serial ? t.t_attempt_us / p_succ : t_pulse / p_succ + flight + signal;
  return t;
}

DensityMatrix heralded_state(const LinkParams& lp) {
  if (!(lp.technical_fidelity > 0.25 && lp.technical_fidelity <= 1.0)) {
    throw InvalidArgument(fmt::format("technical fidelity {} must lie in (0.25, 1]", lp.technical_fidelity));
  }
  return werner(lp.technical_fidelity);
}

LinkBudget evaluate_link(const CavityParams& p, const LinkParams& lp) {
  LinkBudget b;
  b.r_uncoupled = reflection_amplitude(p, false);
  b.r_coupled = reflection_amplitude(p, true);
  b.p_cz = cz_success(p, lp.cz_accounting);
  b.transmission = link_transmission(lp);
  b.p_succ = b.p_cz * b.transmission;
  const EstaTiming t = expected_esta(p, lp);
  b.t_attempt_us = t.t_attempt_us;
  b.t_esta_us = t.t_esta_us;
  b.heralded_state = heralded_state(lp);
  return b;
}

}  // namespace rydrep::link
