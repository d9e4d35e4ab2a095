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

#include "submod/knapsack.h"

#include <cmath>
#include <utility>

#include "submod/error.h"

namespace submod {

KnapsackSystem::KnapsackSystem(Unchecked, int n,
                               std::vector<std::vector<double>> weights,
                               std::vector<double> capacities)
    : n_(n), weights_(std::move(weights)), capacities_(std::move(capacities)) {}

KnapsackSystem::KnapsackSystem(int n, std::vector<std::vector<double>> weights,
                               std::vector<double> capacities)
    : KnapsackSystem(Unchecked{}, n, std::move(weights),
                     std::move(capacities)) {
  if (n < 1) throw InvalidInputError("knapsack system needs n >= 1");
  if (weights_.size() != capacities_.size()) {
    throw InvalidInputError("one weight row per capacity required");
  }
  for (const auto& row : weights_) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidInputError("weight row length differs from n");
    }
    for (double w : row) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw InvalidInputError("knapsack weights must be finite and >= 0");
      }
    }
  }
  for (double c : capacities_) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw InvalidInputError("knapsack capacities must be finite and > 0");
    }
  }
}

bool KnapsackSystem::Packable(std::span<const uint8_t> membership) const {
  if (static_cast<int>(membership.size()) != n_) {
    throw InvalidInputError("membership dimension mismatch");
  }
  for (int i = 0; i < count(); ++i) {
    double load = 0.0;
    for (int j = 0; j < n_; ++j) {
      if (membership[j]) load += weights_[i][j];
    }
    if (!WithinCapacity(load, capacities_[i])) return false;
  }
  return true;
}

bool KnapsackSystem::Packable(const ElementSet& set) const {
  return Packable(ToMembership(n_, set));
}

std::vector<double> KnapsackSystem::Loads(const ElementSet& set) const {
  const Membership in = ToMembership(n_, set);
  std::vector<double> loads(count(), 0.0);
  for (int i = 0; i < count(); ++i) {
    for (int j = 0; j < n_; ++j) {
      if (in[j]) loads[i] += weights_[i][j];
    }
  }
  return loads;
}

ElementSet KnapsackSystem::OversizedElements() const {
  ElementSet out;
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < count(); ++i) {
      if (!WithinCapacity(weights_[i][j], capacities_[i])) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

KnapsackSystem KnapsackSystem::Normalized() const {
  std::vector<std::vector<double>> scaled = weights_;
  for (int i = 0; i < count(); ++i) {
    for (double& w : scaled[i]) w /= capacities_[i];
  }
  return KnapsackSystem(n_, std::move(scaled),
                        std::vector<double>(count(), 1.0));
}

KnapsackSystem KnapsackSystem::Restrict(const ElementSet& ground,
                                        std::vector<double> capacities) const {
  if (static_cast<int>(capacities.size()) != count()) {
    throw InvalidInputError("capacity vector length differs from k");
  }
  std::vector<std::vector<double>> rows(count());
  for (int i = 0; i < count(); ++i) {
    rows[i].reserve(ground.size());
    for (int e : ground) {
      if (e < 0 || e >= n_) throw InvalidElementError("ground outside system");
      rows[i].push_back(weights_[i][e]);
    }
    if (capacities[i] < 0.0) capacities[i] = 0.0;
  }
  return KnapsackSystem(Unchecked{}, static_cast<int>(ground.size()),
                        std::move(rows), std::move(capacities));
}

}  // namespace submod
