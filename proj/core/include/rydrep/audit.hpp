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

#include <cstddef>

#include "rydrep/quantum.hpp"

namespace rydrep {

class KrausChannel;

/// While alive, every DensityMatrix and KrausChannel created on this thread
/// is checked for physicality and the worst deviations are tallied. Scopes
/// nest; the innermost one records.
class PhysicalityAudit {
 public:
  PhysicalityAudit();
  ~PhysicalityAudit();
  PhysicalityAudit(const PhysicalityAudit&) = delete;
  PhysicalityAudit& operator=(const PhysicalityAudit&) = delete;

  std::size_t states_checked() const { return states_; }
  std::size_t channels_checked() const { return channels_; }
  std::size_t failures() const { return failures_; }
  double worst_trace_error() const { return worst_trace_; }
  double worst_hermiticity_error() const { return worst_herm_; }
  double worst_min_eigenvalue() const { return worst_eig_; }
  double worst_trace_preservation_error() const { return worst_tp_; }
  double worst_choi_min_eigenvalue() const { return worst_choi_; }

  /// True when nothing recorded so far exceeded kPhysicalTol.
  bool ok() const { return failures_ == 0; }

  static void record(const DensityMatrix& rho);
  static void record(const KrausChannel& channel);

 private:
  PhysicalityAudit* parent_ = nullptr;
  std::size_t states_ = 0;
  std::size_t channels_ = 0;
  std::size_t failures_ = 0;
  double worst_trace_ = 0.0;
  double worst_herm_ = 0.0;
  double worst_eig_ = 0.0;
  double worst_tp_ = 0.0;
  double worst_choi_ = 0.0;
};

}  // namespace rydrep
