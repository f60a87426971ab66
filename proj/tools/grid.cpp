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

#include "grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "rydrep/errors.hpp"

namespace rydrep::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view v, std::string_view what) {
  T x{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
    throw InvalidArgument(fmt::format("invalid {} '{}'", what, v));
  }
  return x;
}

}  // namespace

std::vector<double> parse_distance_grid(std::string_view spec) {
  std::vector<double> grid;
  if (spec.find(':') == std::string_view::npos) {
    for (auto part : split(spec, ',')) {
      const double d = parse_number<double>(part, "distance");
      if (!(d > 0.0)) throw InvalidArgument(fmt::format("distance {} must be positive", d));
      grid.push_back(d);
    }
    return grid;
  }

  auto body = spec;
  bool log_spacing = true;
  if (const auto comma = spec.find(','); comma != std::string_view::npos) {
    const auto spacing = spec.substr(comma + 1);
    if (spacing == "lin") {
      log_spacing = false;
    } else if (spacing != "log") {
      throw InvalidArgument(fmt::format("grid spacing must be 'log' or 'lin', got '{}'", spacing));
    }
    body = spec.substr(0, comma);
  }
  const auto fields = split(body, ':');
  if (fields.size() != 3) throw InvalidArgument(fmt::format("distance grid '{}' is not lo:hi:points", spec));
  const double lo = parse_number<double>(fields[0], "grid start");
  const double hi = parse_number<double>(fields[1], "grid end");
  const int points = parse_number<int>(fields[2], "point count");
  if (!(lo > 0.0) || !(hi >= lo)) throw InvalidArgument("distance grid needs 0 < lo <= hi");
  if (points < 1) throw InvalidArgument("distance grid needs at least one point");
  if (points == 1) return {lo};

  grid.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    grid.push_back(log_spacing ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<int> parse_station_list(std::string_view spec) {
  std::vector<int> stations;
  for (auto part : split(spec, ',')) stations.push_back(parse_number<int>(part, "station count"));
  return stations;
}

std::vector<bool> parse_fc_selection(std::string_view spec) {
  if (spec == "off") return {false};
  if (spec == "on") return {true};
  if (spec == "both") return {false, true};
  throw InvalidArgument(fmt::format("--fc must be off, on or both, got '{}'", spec));
}

}  // namespace rydrep::cli
