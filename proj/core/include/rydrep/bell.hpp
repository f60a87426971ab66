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

#include <array>
#include <string_view>

#include "rydrep/quantum.hpp"

namespace rydrep {

/// Bell basis, in the order used by BellDiagonalState::weights.
///   Phi+ = (|00> + |11>)/sqrt2     Phi- = (|00> - |11>)/sqrt2
///   Psi+ = (|01> + |10>)/sqrt2     Psi- = (|01> - |10>)/sqrt2
/// Psi+ is the e-bit every protocol in this library targets.
enum class Bell { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

inline constexpr std::array<Bell, 4> kAllBell = {Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus,
                                                 Bell::PsiMinus};

std::string_view to_string(Bell b);
CVector bell_vector(Bell b);
DensityMatrix bell_state(Bell b);

/// <bell| rho |bell> for a two-qubit state.
double fidelity_bell(const DensityMatrix& rho, Bell b = Bell::PsiPlus);

/// F |Psi+><Psi+| + (1-F)/3 (other three projectors), F in [0.25, 1].
DensityMatrix werner(double fidelity);

struct BellDiagonalState {
  std::array<double, 4> weights{0.0, 0.0, 1.0, 0.0};

  /// Validates nonnegativity and normalization within 1e-12.
  static BellDiagonalState from_weights(std::array<double, 4> w);
  static BellDiagonalState werner(double fidelity);

  double operator[](Bell b) const { return weights[static_cast<int>(b)]; }
  double fidelity() const { return (*this)[Bell::PsiPlus]; }
  DensityMatrix to_density_matrix() const;
};

struct BellDecomposition {
  BellDiagonalState state;
  /// Largest off-diagonal magnitude in the Bell basis.
  double leakage = 0.0;
};

BellDecomposition to_bell_diagonal(const DensityMatrix& rho);

}  // namespace rydrep
