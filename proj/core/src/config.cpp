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
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "rydrep/config.hpp"
#include "rydrep/errors.hpp"

namespace rydrep {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

double parse_real(std::string_view v) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw ConfigError(fmt::format("'{}' is not a number", v));
  return x;
}

int parse_int(std::string_view v) {
  int x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw ConfigError(fmt::format("'{}' is not an integer", v));
  return x;
}

bool parse_bool(std::string_view v) {
  const std::string s = lower(v);
  if (s == "true" || s == "on" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "off" || s == "no" || s == "0") return false;
  throw ConfigError(fmt::format("'{}' is not a boolean", v));
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view v, const std::array<Enum, N>& choices) {
  const std::string s = lower(v);
  for (Enum e : choices) {
    if (s == to_string(e)) return e;
  }
  std::string expected;
  for (Enum e : choices) expected += fmt::format("{}{}", expected.empty() ? "" : " | ", to_string(e));
  throw ConfigError(fmt::format("'{}' is not one of {}", v, expected));
}

std::string real(double x) { return fmt::format("{:.9g}", x); }

struct Key {
  std::string_view name;
  std::function<void(Config&, std::string_view)> set;
  std::function<std::string(const Config&)> get;
};

#define RYDREP_REAL_KEY(key, field)                                                  \
  Key {                                                                              \
    key, [](Config& c, std::string_view v) { c.field = parse_real(v); },             \
        [](const Config& c) { return real(c.field); }                                \
  }
#define RYDREP_INT_KEY(key, field)                                                   \
  Key {                                                                              \
    key, [](Config& c, std::string_view v) { c.field = parse_int(v); },              \
        [](const Config& c) { return std::to_string(c.field); }                      \
  }
#define RYDREP_ENUM_KEY(key, field, ...)                                             \
  Key {                                                                              \
    key, [](Config& c, std::string_view v) { c.field = parse_enum(v, std::array{__VA_ARGS__}); }, \
        [](const Config& c) { return std::string(to_string(c.field)); }              \
  }

const std::vector<Key>& key_table() {
  using link::CzAccounting;
  using link::EstaConvention;
  using link::HeraldMode;
  using purification::Protocol;
  using schedule::MoveAccounting;
  static const std::vector<Key> table = {
      RYDREP_REAL_KEY("g_mhz", hw.cavity.g_mhz),
      RYDREP_REAL_KEY("kappa_mhz", hw.cavity.kappa_mhz),
      RYDREP_REAL_KEY("kappa0_mhz", hw.cavity.kappa0_mhz),
      RYDREP_REAL_KEY("gamma_mhz", hw.cavity.gamma_mhz),
      RYDREP_REAL_KEY("length_km", hw.link.length_km),
      RYDREP_REAL_KEY("fiber_db_per_km", hw.link.fiber_db_per_km),
      RYDREP_REAL_KEY("fc_fiber_db_per_km", hw.link.fc_fiber_db_per_km),
      RYDREP_REAL_KEY("circulator_loss_db", hw.link.circulator_loss_db),
      RYDREP_INT_KEY("n_circulators", hw.link.n_circulators),
      RYDREP_REAL_KEY("detector_efficiency", hw.link.detector_efficiency),
      Key{"fc_enabled", [](Config& c, std::string_view v) { c.hw.link.fc_enabled = parse_bool(v); },
          [](const Config& c) { return std::string(c.hw.link.fc_enabled ? "true" : "false"); }},
      RYDREP_REAL_KEY("eta_fc", hw.link.eta_fc),
      RYDREP_REAL_KEY("fiber_index", hw.link.fiber_index),
      RYDREP_REAL_KEY("c_km_per_us", hw.link.c_km_per_us),
      RYDREP_REAL_KEY("pulse_factor", hw.link.pulse_factor),
      RYDREP_REAL_KEY("technical_fidelity", hw.link.technical_fidelity),
      RYDREP_ENUM_KEY("herald_mode", hw.link.herald_mode, HeraldMode::Serial, HeraldMode::Pipelined),
      RYDREP_ENUM_KEY("cz_accounting", hw.link.cz_accounting, CzAccounting::Paper, CzAccounting::PerCavity),
      RYDREP_ENUM_KEY("esta_convention", hw.link.esta_convention, EstaConvention::Text, EstaConvention::Table),
      RYDREP_REAL_KEY("f_op", hw.noise.f_op),
      RYDREP_REAL_KEY("eta_meas", hw.noise.eta_meas),
      RYDREP_REAL_KEY("t_swap_us", hw.stages.t_swap_us),
      RYDREP_REAL_KEY("t_move_us", hw.stages.t_move_us),
      RYDREP_REAL_KEY("t_proj_us", hw.stages.t_proj_us),
      RYDREP_REAL_KEY("p_move", hw.stages.p_move),
      RYDREP_REAL_KEY("f_move", hw.stages.f_move),
      RYDREP_ENUM_KEY("move_accounting", hw.stages.move_accounting, MoveAccounting::Averaged,
                      MoveAccounting::Explicit),
      RYDREP_INT_KEY("parallel_links", hw.stages.parallel_links),
      RYDREP_ENUM_KEY("purification_protocol", hw.protocol, Protocol::Rotated, Protocol::Twirled, Protocol::Plain),
      RYDREP_REAL_KEY("fidelity_target", fidelity_target),
      RYDREP_INT_KEY("max_rounds", max_rounds),
  };
  return table;
}

#undef RYDREP_REAL_KEY
#undef RYDREP_INT_KEY
#undef RYDREP_ENUM_KEY

std::string_view canonical(std::string_view key) {
  if (key == "kappa_0_mhz") return "kappa0_mhz";
  return key;
}

}  // namespace

void Config::validate() const {
  hw.validate();
  if (!(fidelity_target > 0.0 && fidelity_target <= 1.0)) {
    throw InvalidArgument("fidelity_target must lie in (0, 1]");
  }
  if (max_rounds < 0 || max_rounds > chain::kMaxSearchRounds) {
    throw InvalidArgument(fmt::format("max_rounds must lie in [0, {}]", chain::kMaxSearchRounds));
  }
}

chain::ChainParams Config::chain_defaults() const {
  chain::ChainParams c;
  c.fidelity_target = fidelity_target;
  c.max_rounds = max_rounds;
  return c;
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> out;
    for (const auto& k : key_table()) out.push_back(k.name);
    return out;
  }();
  return keys;
}

Config parse_config(std::string_view text, std::string_view source) {
  Config config;
  std::map<std::string, int, std::less<>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = [&] { return fmt::format("{}:{}", source, line_no); };
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(fmt::format("{}: unterminated section header", where()));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(fmt::format("{}: expected 'key = value'", where()));
    const std::string_view key = canonical(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw ConfigError(fmt::format("{}: missing key", where()));
    if (value.empty()) throw ConfigError(fmt::format("{}: missing value for '{}'", where(), key));

    const auto& table = key_table();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Key& k) { return k.name == key; });
    if (it == table.end()) throw ConfigError(fmt::format("{}: unknown key '{}'", where(), key));
    if (const auto prev = seen.find(key); prev != seen.end()) {
      throw ConfigError(fmt::format("{}: '{}' already set on line {}", where(), key, prev->second));
    }
    seen.emplace(std::string(key), line_no);
    try {
      it->set(config, value);
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("{}: {}: {}", where(), key, e.what()));
    }
  }
  try {
    config.validate();
  } catch (const Error& e) {
    throw ConfigError(fmt::format("{}: invalid configuration: {}", source, e.what()));
  }
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

std::vector<std::pair<std::string, std::string>> resolved_entries(const Config& config) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : key_table()) out.emplace_back(std::string(k.name), k.get(config));
  return out;
}

}  // namespace rydrep
