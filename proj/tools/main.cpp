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

// rydrep: link budgets, purification curves and repeater-chain plans.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "grid.hpp"
#include "rydrep/config.hpp"
#include "rydrep/errors.hpp"
#include "rydrep/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct Common {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--config", common.config_path, "Configuration file (key = value)");
  cmd->add_option("--out", common.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

rydrep::Config load(const Common& common) {
  return common.config_path.empty() ? rydrep::parse_config("", "<defaults>") : rydrep::load_config(common.config_path);
}

void emit(const rydrep::report::Table& table, const rydrep::Config& config, const Common& common) {
  const std::string text = rydrep::report::render(table, config, rydrep::report::format_from_string(common.format));
  if (common.out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(common.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw rydrep::Error(fmt::format("cannot open '{}' for writing", common.out_path));
  out << text;
  if (!out) throw rydrep::Error(fmt::format("failed writing '{}'", common.out_path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rydberg-atom cavity quantum repeater simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RYDREP_VERSION);

  Common common;

  auto* link_cmd = app.add_subcommand("link", "Single-link budget: reflection, success probability, T_esta");
  add_common(link_cmd, common);

  int n_max = 8;
  auto* purify_cmd = app.add_subcommand("purify", "Fidelity and rate versus purification rounds");
  add_common(purify_cmd, common);
  purify_cmd->add_option("--n-max", n_max, "Largest number of rounds")->check(CLI::Range(0, 10));

  int stations = 0;
  double distance_km = 0.0;
  bool fc = false;
  std::optional<double> target;
  auto* chain_cmd = app.add_subcommand("chain", "Optimal (N1, N2) plan for one chain");
  add_common(chain_cmd, common);
  chain_cmd->add_option("--stations", stations, "Number of stations M (M - 1 a power of two)")->required();
  chain_cmd->add_option("--distance-km", distance_km, "Total distance L in km")->required();
  auto* fc_flag = chain_cmd->add_flag("--fc", fc, "Enable frequency conversion to 1550 nm");
  chain_cmd->add_option("--target", target, "End-to-end fidelity target");

  std::string station_list{rydrep::cli::kDefaultStations};
  std::string distances{rydrep::cli::kDefaultDistanceGrid};
  std::string fc_selection = "both";
  auto* sweep_cmd = app.add_subcommand("sweep", "Rate versus distance over stations and FC settings");
  add_common(sweep_cmd, common);
  sweep_cmd->add_option("--stations", station_list, "Comma-separated station counts")->capture_default_str();
  sweep_cmd->add_option("--distances", distances, "lo:hi:points[,log|,lin] or a list of km")->capture_default_str();
  sweep_cmd->add_option("--fc", fc_selection, "off | on | both")->capture_default_str();
  sweep_cmd->add_option("--target", target, "End-to-end fidelity target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  rydrep::Config config;
  try {
    config = load(common);
  } catch (const rydrep::Error& e) {
    std::cerr << "rydrep: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*link_cmd) {
      emit(rydrep::report::link_table(config), config, common);
      return kExitOk;
    }
    if (*purify_cmd) {
      emit(rydrep::report::purify_table(config, n_max), config, common);
      return kExitOk;
    }

    auto chain = config.chain_defaults();
    if (target) chain.fidelity_target = *target;

    if (*chain_cmd) {
      chain.m_stations = stations;
      chain.total_length_km = distance_km;
      rydrep::chain::ChainPlanner planner(config.hw);
      const auto plan = planner.optimize(chain, fc_flag->count() > 0 ? fc : config.hw.link.fc_enabled);
      emit(rydrep::report::chain_table("chain", {plan}), config, common);
      if (!plan.feasible) {
        std::cerr << fmt::format("rydrep: target {} unreachable; best end-to-end fidelity {:.9g}\n",
                                 chain.fidelity_target, plan.best_achievable_fidelity);
        return kExitInfeasible;
      }
      return kExitOk;
    }

    if (*sweep_cmd) {
      const auto grid = rydrep::cli::parse_distance_grid(distances);
      const auto station_counts = rydrep::cli::parse_station_list(station_list);
      const auto fc_settings = rydrep::cli::parse_fc_selection(fc_selection);
      const auto plans = rydrep::chain::rate_vs_distance(chain, grid, station_counts, fc_settings, config.hw);
      emit(rydrep::report::chain_table("sweep", plans), config, common);
      return kExitOk;
    }
  } catch (const rydrep::InvalidArgument& e) {
    std::cerr << "rydrep: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "rydrep: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
