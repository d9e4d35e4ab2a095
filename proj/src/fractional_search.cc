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

#include "submod/fractional_search.h"

#include <algorithm>
#include <cmath>

#include "submod/error.h"
#include "submod/random.h"

namespace submod {
namespace {

struct PhaseResult {
  std::vector<double> point;
  double value = 0.0;
  int64_t iterations = 0;
};

PhaseResult SearchPhase(const MultilinearExtension& extension,
                        const PackingPolytope& polytope, double grid,
                        double relative, int64_t max_iters) {
  const int n = extension.size();
  const uint64_t stream = TagHash("fractional-local-search");
  PhaseResult phase;
  phase.point.assign(n, 0.0);
  // Grid coordinates are tracked as integers to avoid drift.
  std::vector<int> level(n, 0);
  const int top = static_cast<int>(std::floor(1.0 / grid + 1e-9));
  phase.value = extension.Value(phase.point, stream);

  std::vector<double> trial = phase.point;
  while (phase.iterations < max_iters) {
    int best_coord = -1;
    int best_step = 0;
    double best_value = phase.value;
    for (int i = 0; i < n; ++i) {
      for (int step : {+1, -1}) {
        const int next = level[i] + step;
        if (next < 0 || next > top) continue;
        trial[i] = std::min(1.0, next * grid);
        // Lowering a coordinate stays inside a down-monotone polytope.
        if (step > 0 && !polytope.IsMember(trial)) {
          trial[i] = phase.point[i];
          continue;
        }
        const double v = extension.Value(trial, stream);
        trial[i] = phase.point[i];
        if (v > best_value) {
          best_value = v;
          best_coord = i;
          best_step = step;
        }
      }
    }
    const double gain = best_value - phase.value;
    if (best_coord < 0 || gain <= relative * std::abs(phase.value) ||
        gain <= 1e-12 * (1.0 + std::abs(phase.value))) {
      break;
    }
    level[best_coord] += best_step;
    phase.point[best_coord] = std::min(1.0, level[best_coord] * grid);
    trial[best_coord] = phase.point[best_coord];
    phase.value = best_value;
    ++phase.iterations;
  }
  return phase;
}

}  // namespace

FractionalSearchResult FractionalLocalSearch(
    const MultilinearExtension& extension, const PackingPolytope& polytope,
    const FractionalSearchConfig& config) {
  const int n = extension.size();
  if (polytope.size() != n) {
    throw InvalidInputError("polytope dimension differs from the function");
  }
  FractionalSearchResult result;
  result.grid = config.grid > 0.0 ? config.grid : 1.0 / (4.0 * n);
  if (result.grid > 1.0) throw InvalidInputError("grid step must be <= 1");
  const double relative = config.epsilon / (static_cast<double>(n) * n);

  const PhaseResult first =
      SearchPhase(extension, polytope, result.grid, relative, config.max_iters);
  std::vector<double> residual(n);
  for (int i = 0; i < n; ++i) {
    residual[i] = std::clamp(1.0 - first.point[i], 0.0, 1.0);
  }
  const PhaseResult second =
      SearchPhase(extension, polytope.RestrictUpper(residual), result.grid,
                  relative, config.max_iters);

  result.first_phase = first.point;
  result.second_phase = second.point;
  result.first_value = first.value;
  result.second_value = second.value;
  result.iterations = first.iterations + second.iterations;
  if (second.value > first.value) {
    result.point = second.point;
    result.value = second.value;
  } else {
    result.point = first.point;
    result.value = first.value;
  }
  return result;
}

}  // namespace submod
