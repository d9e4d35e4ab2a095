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

#ifndef SUBMOD_KNAPSACK_H_
#define SUBMOD_KNAPSACK_H_

#include <span>
#include <vector>

#include "submod/set_function.h"

namespace submod {

// k knapsack constraints sum_{j in S} w[i][j] <= C[i] over n elements.
class KnapsackSystem {
 public:
  // weights is k x n (one row per knapsack). Weights must be >= 0 and
  // capacities > 0. k = 0 is allowed and describes no constraint.
  KnapsackSystem(int n, std::vector<std::vector<double>> weights,
                 std::vector<double> capacities);

  int size() const { return n_; }
  int count() const { return static_cast<int>(capacities_.size()); }
  double weight(int knapsack, int element) const {
    return weights_[knapsack][element];
  }
  double capacity(int knapsack) const { return capacities_[knapsack]; }
  const std::vector<std::vector<double>>& weights() const { return weights_; }
  const std::vector<double>& capacities() const { return capacities_; }

  bool Packable(const ElementSet& set) const;
  bool Packable(std::span<const uint8_t> membership) const;

  // Per-knapsack load of `set`.
  std::vector<double> Loads(const ElementSet& set) const;

  // Elements that violate some capacity on their own.
  ElementSet OversizedElements() const;

  // Same constraints with every capacity rescaled to 1.
  KnapsackSystem Normalized() const;

  // Restriction to `ground` (relabelled to local ids) with the given
  // capacities replacing the current ones. Capacities may be zero here.
  KnapsackSystem Restrict(const ElementSet& ground,
                          std::vector<double> capacities) const;

 private:
  struct Unchecked {};
  KnapsackSystem(Unchecked, int n, std::vector<std::vector<double>> weights,
                 std::vector<double> capacities);

  int n_;
  std::vector<std::vector<double>> weights_;
  std::vector<double> capacities_;
};

// Relative slack used when comparing loads against capacities.
inline constexpr double kLoadTolerance = 1e-12;

inline bool WithinCapacity(double load, double capacity) {
  return load <= capacity + kLoadTolerance * (1.0 + capacity);
}

}  // namespace submod

#endif  // SUBMOD_KNAPSACK_H_
