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

#include <charconv>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rydrep/errors.hpp"
#include "rydrep/report.hpp"

#ifndef RYDREP_VERSION
#define RYDREP_VERSION "unknown"
#endif

namespace rydrep::report {

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

// Doubles go through the 9-digit text so CSV and JSON agree.
nlohmann::json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return std::stod(format_real(v));
        } else {
          return v;
        }
      },
      cell);
}

// Config echo values are text; give them their natural JSON type.
nlohmann::json typed(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  long long i = 0;
  auto [iend, iec] = std::from_chars(text.data(), text.data() + text.size(), i);
  if (iec == std::errc{} && iend == text.data() + text.size()) return i;
  double x = 0.0;
  auto [dend, dec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (dec == std::errc{} && dend == text.data() + text.size()) return x;
  return text;
}

std::vector<std::pair<std::string, std::string>> header_entries(const Table& table, const Config& config) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("rydrep_version", RYDREP_VERSION);
  out.emplace_back("command", table.command);
  for (auto& kv : resolved_entries(config)) out.push_back(std::move(kv));
  for (const auto& kv : table.meta) out.push_back(kv);
  return out;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw InvalidArgument(fmt::format("row has {} cells, table has {} columns", row.size(), columns.size()));
  }
  rows.push_back(std::move(row));
}

Format format_from_string(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InvalidArgument(fmt::format("unknown output format '{}' (csv | json)", s));
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  return fmt::format("{:.9g}", x);
}

std::string render_csv(const Table& table, const Config& config) {
  std::string out;
  for (const auto& [k, v] : header_entries(table, config)) out += fmt::format("# {} = {}\n", k, v);
  out += fmt::format("{}\n", fmt::join(table.columns, ","));
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& c : row) cells.push_back(cell_text(c));
    out += fmt::format("{}\n", fmt::join(cells, ","));
  }
  return out;
}

std::string render_json(const Table& table, const Config& config) {
  nlohmann::ordered_json doc;
  doc["rydrep_version"] = RYDREP_VERSION;
  doc["command"] = table.command;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : resolved_entries(config)) cfg[k] = typed(v);
  doc["config"] = cfg;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.meta) meta[k] = typed(v);
  doc["meta"] = meta;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, const Config& config, Format format) {
  return format == Format::Csv ? render_csv(table, config) : render_json(table, config);
}

Table link_table(const Config& config) {
  const auto budget = link::evaluate_link(config.hw.cavity, config.hw.link);
  Table t;
  t.command = "link";
  t.columns = {"length_km",    "fc_enabled", "r_uncoupled", "r_coupled", "p_cz",   "transmission",
               "p_succ",       "t_attempt_us", "t_esta_us", "rate_hz",   "heralded_fidelity"};
  t.add_row({config.hw.link.length_km, config.hw.link.fc_enabled, budget.r_uncoupled.real(), budget.r_coupled.real(),
             budget.p_cz, budget.transmission, budget.p_succ, budget.t_attempt_us, budget.t_esta_us, budget.rate_hz(),
             fidelity_bell(budget.heralded_state)});
  return t;
}

Table purify_table(const Config& config, int n_max) {
  if (n_max < 0 || n_max > schedule::kMaxCurveRounds) {
    throw InvalidArgument(fmt::format("n_max must lie in [0, {}]", schedule::kMaxCurveRounds));
  }
  const auto& hw = config.hw;
  const auto timings = schedule::OperationTimings::for_link(hw.cavity, hw.link, hw.stages);

  Table t;
  t.command = "purify";
  t.columns = {"operations", "f0", "n", "fidelity", "p_puri", "t_eg_us", "rate_hz"};
  struct Setting {
    const char* name;
    noise::GateNoiseParams params;
  };
  const Setting settings[] = {{"noisy", hw.noise}, {"ideal", noise::GateNoiseParams::ideal()}};
  for (const auto& s : settings) {
    for (double f0 : {0.91, 0.8}) {
      const auto curve = schedule::rate_fidelity_curve(n_max, werner(f0), s.params, timings, hw.protocol);
      for (const auto& p : curve) {
        t.add_row({std::string(s.name), f0, static_cast<long long>(p.n), p.fidelity, p.p_puri, p.t_eg_us, p.rate_hz});
      }
    }
  }

  const auto reference = schedule::rate_fidelity_curve(kCalibrationRounds, werner(0.91), hw.noise, timings, hw.protocol);
  std::vector<double> probabilities;
  for (std::size_t k = 1; k < reference.size(); ++k) probabilities.push_back(reference[k].p_puri);
  t.meta.emplace_back("calibration_target_hz", format_real(kCalibrationRateHz));
  t.meta.emplace_back("calibration_rounds", std::to_string(kCalibrationRounds));
  try {
    t.meta.emplace_back("calibrated_t_proj_us",
                        format_real(schedule::calibrate_t_proj(kCalibrationRateHz, kCalibrationRounds, timings,
                                                               probabilities)));
  } catch (const Error&) {
    // Target unreachable with the configured generation stage.
    t.meta.emplace_back("calibrated_t_proj_us", "nan");
  }
  return t;
}

Table chain_table(std::string command, const std::vector<chain::ChainPlan>& plans) {
  Table t;
  t.command = std::move(command);
  t.columns = {"stations",    "distance_km",  "link_length_km", "fc_enabled", "herald_mode",
               "esta_convention", "fidelity_target", "feasible", "n1",      "n2",
               "fidelity",    "rate_hz",      "t_qr_us",        "t_pair_us",  "link_p_succ",
               "link_t_esta_us", "best_fidelity"};
  for (const auto& p : plans) {
    t.add_row({static_cast<long long>(p.m_stations), p.total_length_km, p.total_length_km / (p.m_stations - 1),
               p.fc_enabled, std::string(link::to_string(p.herald_mode)),
               std::string(link::to_string(p.esta_convention)), p.fidelity_target, p.feasible,
               static_cast<long long>(p.n1), static_cast<long long>(p.n2), p.f_m, p.rate_hz, p.t_qr_us, p.t_pair_us,
               p.link_p_succ, p.link_t_esta_us, p.best_achievable_fidelity});
  }
  return t;
}

}  // namespace rydrep::report
