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

#ifndef SUBMOD_FRACTIONAL_SEARCH_H_
#define SUBMOD_FRACTIONAL_SEARCH_H_

#include <cstdint>
#include <vector>

#include "submod/extension.h"
#include "submod/polytope.h"

namespace submod {

struct FractionalSearchConfig {
  // Grid step. Zero selects 1/(4n).
  double grid = 0.0;
  // A move must improve F by a factor of at least 1 + epsilon / n^2.
  double epsilon = 1e-3;
  int64_t max_iters = 1'000'000;
};

struct FractionalSearchResult {
  std::vector<double> point;
  double value = 0.0;
  std::vector<double> first_phase;
  std::vector<double> second_phase;
  double first_value = 0.0;
  double second_value = 0.0;
  int64_t iterations = 0;
  double grid = 0.0;
};

// Coordinate local search for F over P on the grid {0, delta, 2 delta, ...}:
// from the origin, repeatedly applies the best feasible move x +- delta e_i
// while it improves F. A second phase repeats the search over P restricted
// to y <= 1 - x_first and the better of the two points is returned.
FractionalSearchResult FractionalLocalSearch(
    const MultilinearExtension& extension, const PackingPolytope& polytope,
    const FractionalSearchConfig& config);

}  // namespace submod

#endif  // SUBMOD_FRACTIONAL_SEARCH_H_
