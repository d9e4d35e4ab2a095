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

#ifndef SUBMOD_LOCAL_SEARCH_H_
#define SUBMOD_LOCAL_SEARCH_H_

#include <cstdint>

#include "submod/set_function.h"

namespace submod {

enum class SmoothingMode {
  // Add/delete local search on f, then the better of S and its complement.
  kNone,
  // Moves are scored by F at the point that is 0.9 on S and 0.1 elsewhere.
  kSmoothed,
};

struct LocalSearchConfig {
  // Improvement threshold: a move is taken only if it improves the objective
  // by a factor of at least 1 + epsilon / n^4 (cardinality search) or
  // 1 + epsilon / n^2 (unconstrained search).
  double epsilon = 1e-3;
  int64_t max_iters = 1'000'000;
  uint64_t seed = 0;
  SmoothingMode smoothing = SmoothingMode::kNone;
  // Monte-carlo samples for the smoothed objective when it has no closed
  // form and the ground set is too large for exact enumeration.
  int64_t smoothing_samples = 4000;
};

struct LocalSearchOutcome {
  ElementSet set;
  double value = 0.0;
  int64_t iterations = 0;
};

// Size-k subset of `ground` that is an approximate local optimum under
// single swaps. Starts from the greedy solution. Throws InfeasibleError when
// k > |ground|.
LocalSearchOutcome LocalSearchCardinality(const SetFunction& f,
                                          const ElementSet& ground, int k,
                                          const LocalSearchConfig& config);

// Size-k subset of X \ forbidden with 2(1+eps') f(S2) >= f(S2 u C') for every
// C' of size <= k outside `forbidden`.
LocalSearchOutcome SecondSet(const SetFunction& f, const ElementSet& forbidden,
                             int k, const LocalSearchConfig& config);

struct CardinalitySolveReport {
  ElementSet first;
  ElementSet second;
  ElementSet winner;
  double first_value = 0.0;
  double second_value = 0.0;
  double winner_value = 0.0;
  int64_t first_iterations = 0;
  int64_t second_iterations = 0;
  // True when k > n/2 and the search ran on g(S) = f(X \ S).
  bool complemented = false;
};

// Better of a local-search set and a second disjoint local-search set; for
// k > n/2 the same procedure runs on the complement function with n - k.
// f(winner) >= (1/4 - O(eps)) max_{|C| = k} f(C).
CardinalitySolveReport SolveExactCardinality(const SetFunction& f, int k,
                                             const LocalSearchConfig& config);

// Approximate maximizer of f over subsets of `ground`. With the default mode
// the result is within 1/3 - O(eps) of optimal.
LocalSearchOutcome UnconstrainedLocalSearch(const SetFunction& f,
                                            const ElementSet& ground,
                                            const LocalSearchConfig& config);

// Inner approximation ratio guaranteed (kNone) or targeted (kSmoothed).
double InnerRatio(SmoothingMode mode);

}  // namespace submod

#endif  // SUBMOD_LOCAL_SEARCH_H_
