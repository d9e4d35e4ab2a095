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

#include "submod/continuous_greedy.h"

#include <algorithm>

#include "submod/error.h"
#include "submod/random.h"

namespace submod {

int DefaultGreedySteps(int n) { return std::max(1, n * n); }

GreedyRunResult ContinuousGreedy(const MultilinearExtension& extension,
                                 const PackingPolytope& polytope, int steps) {
  const int n = extension.size();
  if (polytope.size() != n) {
    throw InvalidInputError("polytope dimension differs from the function");
  }
  if (steps < 1) throw PreconditionError("continuous greedy needs T >= 1");
  const uint64_t value_stream = TagHash("trajectory-values");
  const double width = 1.0 / steps;

  GreedyRunResult result;
  Trajectory& traj = result.trajectory;
  std::vector<double> y(n, 0.0);
  traj.times.push_back(0.0);
  traj.points.push_back(y);
  traj.values.push_back(extension.Value(y, value_stream));
  for (int m = 0; m < steps; ++m) {
    // One sample batch per step serves every coordinate of the gradient.
    const std::vector<double> grad =
        extension.Gradient(y, DeriveSeed(TagHash("greedy-step"), m));
    const std::vector<double> direction = polytope.MaximizeLinear(grad);
    for (int i = 0; i < n; ++i) {
      y[i] = std::min(1.0, y[i] + width * direction[i]);
    }
    traj.times.push_back(m + 1 == steps ? 1.0 : (m + 1) * width);
    traj.points.push_back(y);
    traj.values.push_back(extension.Value(y, value_stream));
  }
  result.final_point = y;

  std::vector<double> diff(n);
  for (size_t m = 0; m < traj.points.size(); ++m) {
    for (int i = 0; i < n; ++i) {
      diff[i] = std::clamp(y[i] - traj.points[m][i], 0.0, 1.0);
    }
    const double v = extension.Value(diff, value_stream);
    if (m == 0 || v > result.dmax_value) {
      result.dmax_value = v;
      result.dmax_point = diff;
      result.dmax_index = static_cast<int>(m);
    }
  }
  return result;
}

GreedyRunResult ContinuousGreedy(const SetFunction& f,
                                 const ExtensionEstimator& estimator,
                                 const PackingPolytope& polytope, int steps) {
  const MultilinearExtension extension(f, estimator);
  return ContinuousGreedy(extension, polytope, steps);
}

}  // namespace submod
