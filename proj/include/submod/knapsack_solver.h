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

#ifndef SUBMOD_KNAPSACK_SOLVER_H_
#define SUBMOD_KNAPSACK_SOLVER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "submod/fractional_search.h"
#include "submod/knapsack.h"
#include "submod/matroid.h"
#include "submod/packing_solver.h"
#include "submod/set_function.h"

namespace submod {

struct KnapsackAlgoConfig {
  // Must satisfy 0 < epsilon < 1/(4k^2) for k >= 1 knapsacks.
  double epsilon = 0.05;
  // Largest enumerated seed set; stands in for 1/epsilon^4.
  int enum_cap = 2;
  uint64_t seed = 0;
  // Monte-carlo samples for residual problems above kMaxTableElements
  // elements; zero selects the default count.
  int64_t samples = 0;
  // Independent rounding draws per seed set.
  int rounding_draws = 1;
  FractionalSearchConfig fractional;
  // Fractional engine for the matroid variant.
  PackingConfig packing;

  // Throws InvalidInputError when the configuration is unusable for k
  // knapsacks.
  void Validate(int knapsack_count) const;
};

inline constexpr int kMaxEnumCap = 3;

enum class GuaranteeRegime {
  // Every seed set the analysis needs is enumerated.
  kFull,
  // enum_cap < 1/epsilon^4: exact whenever the optimum has at most enum_cap
  // elements, otherwise heuristic.
  kHeuristicEnumeration,
};

std::string ToString(GuaranteeRegime regime);

struct KnapsackSolveReport {
  ElementSet set;
  double value = 0.0;
  // Guarantee constant of the algorithm (0.25 - 2 eps, or the packing
  // factor for the matroid variant) and the regime it applies under.
  double guarantee = 0.0;
  GuaranteeRegime regime = GuaranteeRegime::kHeuristicEnumeration;
  ElementSet dropped;  // elements infeasible on their own
  std::vector<std::string> warnings;
  int64_t seed_sets = 0;           // seed sets A examined
  int64_t fractional_solves = 0;   // seed sets with a non-empty residual
  int64_t roundings = 0;
  int64_t rounding_rejections = 0;  // rounded sets that were not packable
  // Whether the returned set came from rounding (true) or enumeration.
  bool from_rounding = false;
  uint64_t seed = 0;
};

// Enumerates seed sets A of at most enum_cap elements, prunes heavy and
// high-marginal items, solves the fractional residual problem on the box
// with capacities shrunk by (1 - eps), rounds it independently, and returns
// the best packable set seen. Capacities are normalized to 1 first.
KnapsackSolveReport SolveKnapsacks(const SetFunction& f,
                                   const KnapsackSystem& knapsacks,
                                   const KnapsackAlgoConfig& config);

// Same enumeration with the five-candidate packing solver over
// P(M / A) intersected with the shrunk knapsack polytope as the fractional
// engine, followed by pipage rounding in M / A. The result is independent
// in `matroid` and packable.
KnapsackSolveReport SolveMatroidAndKnapsacks(const SetFunction& f,
                                             const Matroid& matroid,
                                             const KnapsackSystem& knapsacks,
                                             const KnapsackAlgoConfig& config);

}  // namespace submod

#endif  // SUBMOD_KNAPSACK_SOLVER_H_
