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

// Tables behind every subcommand and their CSV / JSON renderings. Both
// formats open with the fully resolved configuration so an output file is
// enough to reproduce its numbers.

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rydrep/config.hpp"
#include "rydrep/repeater_chain.hpp"

namespace rydrep::report {

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Run-specific facts echoed after the configuration.
  std::vector<std::pair<std::string, std::string>> meta;

  /// Throws InvalidArgument on a column-count mismatch.
  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

Format format_from_string(std::string_view s);

/// 9 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_real(double x);

/// Comment lines `# key = value`, then the header row and data rows,
/// comma-separated, LF line endings.
std::string render_csv(const Table& table, const Config& config);
std::string render_json(const Table& table, const Config& config);
std::string render(const Table& table, const Config& config, Format format);

/// Single-row link budget at config.hw.link.length_km.
Table link_table(const Config& config);

/// Rate / fidelity curves for N = 0..n_max, noisy and ideal operations,
/// from Werner inputs at 0.91 and 0.8. The t_proj that puts the noisy
/// N = 4 curve from 0.91 at 1.1 kHz is recorded in the meta block.
Table purify_table(const Config& config, int n_max);

inline constexpr double kCalibrationRateHz = 1100.0;
inline constexpr int kCalibrationRounds = 4;

Table chain_table(std::string command, const std::vector<chain::ChainPlan>& plans);

}  // namespace rydrep::report
