// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBMOD_SIMPLEX_H_
#define SUBMOD_SIMPLEX_H_

#include <span>
#include <vector>

namespace submod {

enum class PivotRule { kDantzig, kBland };

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
  int pivots = 0;
  // True when the Dantzig pass hit its guard and Bland's rule finished.
  bool used_bland = false;
};

// Upper limit on variables + constraint rows accepted by the dense solver.
inline constexpr int kMaxLpDimension = 200;

// Solves max c.x subject to A x <= b, x >= 0 for b >= 0 (the origin is
// feasible, so no phase one is needed) with a dense tableau. Dantzig pricing
// runs first; if it exceeds its pivot guard the solve restarts under Bland's
// rule. Ties are broken toward the lowest variable index. Throws
// NumericalFailureError when the problem is unbounded or Bland's rule also
// exceeds the guard, and BackendLimitError above kMaxLpDimension.
LpSolution MaximizePackingLp(const std::vector<std::vector<double>>& a,
                             std::span<const double> b,
                             std::span<const double> c);

// Single pass with a fixed rule; exposed for testing the fallback.
LpSolution MaximizePackingLp(const std::vector<std::vector<double>>& a,
                             std::span<const double> b,
                             std::span<const double> c, PivotRule rule,
                             int max_pivots);

}  // namespace submod

#endif  // SUBMOD_SIMPLEX_H_
