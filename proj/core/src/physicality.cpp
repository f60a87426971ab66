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

#include "rydrep/audit.hpp"
#include "rydrep/channel.hpp"

namespace rydrep {

namespace {
thread_local PhysicalityAudit* g_active_audit = nullptr;
}

PhysicalityAudit::PhysicalityAudit() : parent_(g_active_audit) { g_active_audit = this; }

PhysicalityAudit::~PhysicalityAudit() { g_active_audit = parent_; }

void PhysicalityAudit::record(const DensityMatrix& rho) {
  PhysicalityAudit* audit = g_active_audit;
  if (audit == nullptr) return;
  const PhysicalityReport r = rho.physicality();
  ++audit->states_;
  audit->worst_trace_ = std::max(audit->worst_trace_, r.trace_error);
  audit->worst_herm_ = std::max(audit->worst_herm_, r.hermiticity_error);
  audit->worst_eig_ = std::min(audit->worst_eig_, r.min_eigenvalue);
  if (!r.ok()) ++audit->failures_;
}

void PhysicalityAudit::record(const KrausChannel& channel) {
  PhysicalityAudit* audit = g_active_audit;
  if (audit == nullptr) return;
  const double tp = channel.trace_preservation_error();
  const double choi = channel.choi_min_eigenvalue();
  ++audit->channels_;
  audit->worst_tp_ = std::max(audit->worst_tp_, tp);
  audit->worst_choi_ = std::min(audit->worst_choi_, choi);
  if (tp > kPhysicalTol || choi < -kPhysicalTol) ++audit->failures_;
}

}  // namespace rydrep
