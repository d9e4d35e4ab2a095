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

#ifndef SUBMOD_PACKING_SOLVER_H_
#define SUBMOD_PACKING_SOLVER_H_

#include <array>
#include <string>
#include <vector>

#include "submod/box_search.h"
#include "submod/continuous_greedy.h"
#include "submod/extension.h"
#include "submod/polytope.h"

namespace submod {

struct PackingConfig {
  int steps = 0;  // zero selects n^2
  BoxSearchConfig box;
};

struct PackingCandidate {
  std::string name;
  std::vector<double> point;
  double value = 0.0;
};

struct PackingSolveReport {
  std::vector<double> point;
  double value = 0.0;
  // In evaluation order: greedy, residual greedy, box search, greedy
  // difference point, residual greedy difference point.
  std::array<PackingCandidate, 5> candidates;
  int winner = 0;
  double beta = 1.0 / 3.0;
  double certified_factor = 0.0;
  GreedyRunResult first_run;
  GreedyRunResult second_run;
  BoxSearchResult box;
  int steps = 0;
};

// beta (e - 1) / ((4e - 2) beta + (e - 1)): the approximation factor of the
// five-candidate scheme when the box search has inner ratio beta.
double CertifiedPackingFactor(double beta);

// Maximizes F over a down-monotone solvable polytope:
//   1. y1 = continuous greedy over P, and its best difference point;
//   2. box search under the upper bound y1;
//   3. y2 = continuous greedy over P with y <= 1 - y1, and its best
//      difference point;
// and returns the best of the five points under F.
PackingSolveReport SolvePacking(const MultilinearExtension& extension,
                                const PackingPolytope& polytope,
                                const PackingConfig& config);

PackingSolveReport SolvePacking(const SetFunction& f,
                                const ExtensionEstimator& estimator,
                                const PackingPolytope& polytope,
                                const PackingConfig& config);

}  // namespace submod

#endif  // SUBMOD_PACKING_SOLVER_H_
