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

#include "rydrep/cavity_link.hpp"
#include "rydrep/noise.hpp"
#include "rydrep/purification.hpp"
#include "rydrep/scheduler.hpp"

namespace rydrep {

/// Every physical and protocol parameter of one repeater architecture.
struct HardwareParams {
  link::CavityParams cavity;
  link::LinkParams link;
  noise::GateNoiseParams noise;
  schedule::StageParams stages;
  purification::Protocol protocol = purification::Protocol::Rotated;

  void validate() const {
    cavity.validate();
    link.validate();
    noise.validate();
    stages.validate();
  }
};

}  // namespace rydrep
