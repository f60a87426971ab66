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

#include "rydrep/quantum.hpp"

namespace rydrep::gates {

CMatrix identity(int n_qubits);
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix hadamard();
/// exp(-i theta X / 2)
CMatrix rx(double theta);
/// Control is the first qubit of the pair.
CMatrix cnot();
CMatrix cz();
/// |b><b| on one qubit.
CMatrix projector(int bit);

}  // namespace rydrep::gates
