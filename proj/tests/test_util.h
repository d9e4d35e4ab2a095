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

// Independent reference computations for tests. These deliberately avoid
// the library's table folding and brute-force code paths.

#ifndef SUBMOD_TESTS_TEST_UTIL_H_
#define SUBMOD_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "submod/set_function.h"

namespace submod::testing {

inline ElementSet MaskToSet(int n, uint32_t mask) {
  ElementSet s;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1u) s.push_back(i);
  }
  return s;
}

// F(x) as the displayed sum over all subsets of the product weights.
inline double ReferenceExtension(const SetFunction& f,
                                 std::span<const double> x) {
  const int n = f.size();
  double total = 0.0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= (mask >> i & 1u) ? x[i] : 1.0 - x[i];
    if (p != 0.0) total += p * f.Evaluate(MaskToSet(n, mask));
  }
  return total;
}

// Maximum of f over subsets accepted by `feasible`.
inline double ReferenceMax(const SetFunction& f,
                           const std::function<bool(const ElementSet&)>& feasible) {
  const int n = f.size();
  double best = -std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElementSet s = MaskToSet(n, mask);
    if (feasible(s)) best = std::max(best, f.Evaluate(s));
  }
  return best;
}

inline std::unique_ptr<GraphCutFunction> Triangle() {
  return std::make_unique<GraphCutFunction>(
      3, std::vector<WeightedEdge>{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

inline std::unique_ptr<GraphCutFunction> SingleEdge() {
  return std::make_unique<GraphCutFunction>(
      2, std::vector<WeightedEdge>{{0, 1, 1.0}});
}

inline std::unique_ptr<GraphCutFunction> Path3() {
  return std::make_unique<GraphCutFunction>(
      3, std::vector<WeightedEdge>{{0, 1, 1.0}, {1, 2, 1.0}});
}

}  // namespace submod::testing

#endif  // SUBMOD_TESTS_TEST_UTIL_H_
