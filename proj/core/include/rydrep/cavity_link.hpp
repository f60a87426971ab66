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

// Heralded photon-mediated link between two adjacent nodes.
//
// Rates are configured in units of 2*pi x MHz and converted to angular
// frequency in rad/us, so pulse_factor / kappa comes out in microseconds.
// Lengths are in km and light speeds in km/us.

#include <string_view>

#include "rydrep/bell.hpp"
#include "rydrep/quantum.hpp"

namespace rydrep::link {

/// Vacuum light speed in km/us.
inline constexpr double kSpeedOfLight = 0.299792458;

struct CavityParams {
  double g_mhz = 7.6;
  double kappa_mhz = 4.0;
  double kappa0_mhz = 0.2;
  double gamma_mhz = 3.0;

  double kappa_ex_mhz() const { return kappa_mhz - kappa0_mhz; }
  /// kappa in rad/us.
  double kappa_angular() const;
  void validate() const;
};

enum class HeraldMode { Serial, Pipelined };
/// Paper (default): the 81% success is charged once per heralding sequence.
/// PerCavity: charged at each of the two cavities (|r|^4).
enum class CzAccounting { Paper, PerCavity };
/// Text: attempt time includes the l/c heralding signal. Table: it does not.
enum class EstaConvention { Text, Table };

std::string_view to_string(HeraldMode m);
std::string_view to_string(CzAccounting a);
std::string_view to_string(EstaConvention c);

struct LinkParams {
  double length_km = 0.1;
  double fiber_db_per_km = 3.0;      // 780 nm
  double fc_fiber_db_per_km = 0.19;  // 1550 nm, used when fc_enabled
  double circulator_loss_db = 1.0;
  int n_circulators = 2;
  double detector_efficiency = 0.75;
  bool fc_enabled = false;
  double eta_fc = 0.6;
  double fiber_index = 1.5;
  double c_km_per_us = kSpeedOfLight;
  double pulse_factor = 20.0;
  double technical_fidelity = 0.96;
  HeraldMode herald_mode = HeraldMode::Serial;
  CzAccounting cz_accounting = CzAccounting::Paper;
  EstaConvention esta_convention = EstaConvention::Text;

  double attenuation_db_per_km() const { return fc_enabled ? fc_fiber_db_per_km : fiber_db_per_km; }
  double fiber_speed() const { return c_km_per_us / fiber_index; }
  void validate() const;
};

/// Resonant single-sided cavity reflection:
///   uncoupled  r = 1 - 2 kappa_ex / kappa
///   coupled    r = 1 - 2 kappa_ex / (kappa + 4 g^2 / gamma)
Complex reflection_amplitude(const CavityParams& p, bool atom_coupled);

/// Post-selected conditional-phase success probability per heralding sequence.
double cz_success(const CavityParams& p, CzAccounting accounting);

/// Fiber attenuation x circulator insertion loss x detector efficiency
/// (x eta_fc^2 with frequency conversion).
double link_transmission(const LinkParams& lp);

double herald_success(const CavityParams& p, const LinkParams& lp);

struct EstaTiming {
  double t_attempt_us = 0.0;
  double t_esta_us = 0.0;
};

/// Serial: every attempt waits for its herald, t_esta = t_attempt / P.
/// Pipelined: probe pulses are sent back to back and only one flight time
/// is paid, t_esta = t_pulse / P + l/v + l/c.
EstaTiming expected_esta(const CavityParams& p, const LinkParams& lp);

/// Werner state at the technical fidelity, already corrected to Psi+.
DensityMatrix heralded_state(const LinkParams& lp);

struct LinkBudget {
  Complex r_uncoupled;
  Complex r_coupled;
  double p_cz = 0.0;
  double transmission = 0.0;
  double p_succ = 0.0;
  double t_attempt_us = 0.0;
  double t_esta_us = 0.0;
  DensityMatrix heralded_state;

  double rate_hz() const { return 1e6 / t_esta_us; }
};

LinkBudget evaluate_link(const CavityParams& p, const LinkParams& lp);

}  // namespace rydrep::link
