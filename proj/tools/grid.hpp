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

// Command-line value lists: distance grids and station / FC selections.

#include <string_view>
#include <vector>

namespace rydrep::cli {

/// "lo:hi:points[,log|,lin]" (default spacing log) or a comma-separated
/// list of values. Endpoints are reproduced exactly.
std::vector<double> parse_distance_grid(std::string_view spec);

/// Comma-separated station counts, e.g. "2,5,17".
std::vector<int> parse_station_list(std::string_view spec);

/// "off", "on" or "both".
std::vector<bool> parse_fc_selection(std::string_view spec);

inline constexpr std::string_view kDefaultDistanceGrid = "1:500:40,log";
inline constexpr std::string_view kDefaultStations = "2,5,17";

}  // namespace rydrep::cli
