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

#ifndef SUBMOD_CONTINUOUS_GREEDY_H_
#define SUBMOD_CONTINUOUS_GREEDY_H_

#include <vector>

#include "submod/extension.h"
#include "submod/polytope.h"

namespace submod {

// Grid trajectory of the discretized continuous greedy process.
struct Trajectory {
  std::vector<double> times;               // 0 = t_0 < ... < t_T = 1
  std::vector<std::vector<double>> points;  // y(t_m)
  std::vector<double> values;              // F(y(t_m)) as estimated
};

struct GreedyRunResult {
  std::vector<double> final_point;  // y(1)
  Trajectory trajectory;
  // argmax over grid times of F(y(1) - y(t_m)) and its value.
  std::vector<double> dmax_point;
  double dmax_value = 0.0;
  int dmax_index = 0;
};

// Euler discretization of dy/dt = argmax_{v in P} v . grad F(y) with T steps
// of width 1/T, starting at y(0) = 0. Coordinates are clamped at 1 to absorb
// floating-point and sampling overshoot. Also scans the grid for the best
// difference point y(1) - y(t_m). Errors from the linear oracle propagate.
GreedyRunResult ContinuousGreedy(const MultilinearExtension& extension,
                                 const PackingPolytope& polytope, int steps);

GreedyRunResult ContinuousGreedy(const SetFunction& f,
                                 const ExtensionEstimator& estimator,
                                 const PackingPolytope& polytope, int steps);

// Default number of steps: n^2 (at least 1).
int DefaultGreedySteps(int n);

}  // namespace submod

#endif  // SUBMOD_CONTINUOUS_GREEDY_H_
