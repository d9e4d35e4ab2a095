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

#ifndef SUBMOD_HARNESS_BRUTE_FORCE_H_
#define SUBMOD_HARNESS_BRUTE_FORCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "submod/knapsack.h"
#include "submod/matroid.h"
#include "submod/polytope.h"
#include "submod/set_function.h"

namespace submod::harness {

inline constexpr int kMaxBruteForceElements = 16;
inline constexpr int64_t kMaxGridPoints = 10'000'000;

struct BruteForceResult {
  double value = 0.0;
  // Lexicographically least optimal set (subset searches).
  ElementSet witness;
  // Optimal point (grid searches; the indicator of `witness` otherwise).
  std::vector<double> point;
  int64_t evaluated = 0;
  std::string method;
};

// All of these refuse (BackendLimitError) above kMaxBruteForceElements.
BruteForceResult BruteForceCardinality(const SetFunction& f, int k);
BruteForceResult BruteForceKnapsacks(const SetFunction& f,
                                     const KnapsackSystem& knapsacks);
// Independent in `matroid` and, when given, packable.
BruteForceResult BruteForceMatroid(
    const SetFunction& f, const Matroid& matroid,
    const std::optional<KnapsackSystem>& knapsacks = std::nullopt);
BruteForceResult BruteForceUnconstrained(const SetFunction& f);

// max F over the points of P whose coordinates are multiples of
// `resolution`, with exact F. Refuses above kMaxGridPoints grid points.
BruteForceResult BruteForcePackingGrid(const SetFunction& f,
                                       const PackingPolytope& polytope,
                                       double resolution);

// Number of points the grid search would visit, or -1 on overflow.
int64_t GridPointCount(int n, double resolution);

// max F over the grid of a pure matroid polytope. Exhaustive when the grid
// is small enough; otherwise reduces to independent sets: along e_i - e_j
// F is convex and along e_i it is linear, so some optimal grid point is
// integral. `method` records which route was taken.
BruteForceResult BruteForceMatroidPolytopeGrid(const SetFunction& f,
                                               const Matroid& matroid,
                                               double resolution);

// sup of F over the box {0 <= x <= u}: F is multilinear, so it is attained
// at a corner with x_i in {0, u_i}. Requires n <= 20.
BruteForceResult MaxOverBox(const SetFunction& f, std::span<const double> upper);

// max |F| over [0,1]^n, i.e. max |f(S)|.
double MaxAbsValue(const SetFunction& f);

}  // namespace submod::harness

#endif  // SUBMOD_HARNESS_BRUTE_FORCE_H_
