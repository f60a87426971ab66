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

// Flat `key = value` configuration files. Lines starting with '#' are
// comments, `[section]` headers are accepted and ignored, and every key not
// listed in config_keys() is an error. Absent keys keep their defaults.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rydrep/hardware.hpp"
#include "rydrep/repeater_chain.hpp"

namespace rydrep {

struct Config {
  HardwareParams hw;
  /// Defaults for chain searches; --target on the command line overrides.
  double fidelity_target = 0.99;
  int max_rounds = 8;

  void validate() const;
  chain::ChainParams chain_defaults() const;
};

/// Canonical key names, in echo order.
const std::vector<std::string_view>& config_keys();

/// Throws ConfigError with "<source>:<line>: ..." on malformed input and
/// with the violated invariant on validation failure.
Config parse_config(std::string_view text, std::string_view source = "<config>");
Config load_config(const std::filesystem::path& path);

/// Every key with its resolved value, in config_keys() order. Reals use 9
/// significant digits so the echo reproduces the run.
std::vector<std::pair<std::string, std::string>> resolved_entries(const Config& config);

}  // namespace rydrep
