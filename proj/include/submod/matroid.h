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

#ifndef SUBMOD_MATROID_H_
#define SUBMOD_MATROID_H_

#include <span>
#include <string>
#include <vector>

#include "submod/set_function.h"

namespace submod {

enum class MatroidKind { kFree, kUniform, kPartition };

std::string ToString(MatroidKind kind);

// Free, uniform and partition matroids. All three are partition matroids
// underneath: element i belongs to block block_of(i) with capacity
// capacity(block), and a set is independent iff no block is over capacity.
// Free matroids have no blocks (block_of == -1 everywhere).
class Matroid {
 public:
  static Matroid Free(int n);
  static Matroid Uniform(int n, int rank);
  // block_of[i] in [0, capacities.size()) or -1 for unconstrained elements.
  static Matroid Partition(std::vector<int> block_of,
                           std::vector<int> capacities);

  MatroidKind kind() const { return kind_; }
  int size() const { return static_cast<int>(block_of_.size()); }
  int num_blocks() const { return static_cast<int>(capacities_.size()); }
  int block_of(int element) const { return block_of_[element]; }
  int capacity(int block) const { return capacities_[block]; }
  const std::vector<int>& block_assignment() const { return block_of_; }
  const std::vector<int>& capacities() const { return capacities_; }

  bool IsIndependent(const ElementSet& set) const;
  bool IsIndependent(std::span<const uint8_t> membership) const;

  // r(S) = sum over blocks of min(|S cap block|, capacity).
  int Rank(const ElementSet& set) const;

  // Whether adding `element` to the independent set `membership` keeps it
  // independent.
  bool CanAdd(std::span<const uint8_t> membership, int element) const;

  // M / A restricted to `ground`, relabelled to local ids 0..|ground|-1.
  // Requires A independent and disjoint from ground.
  Matroid Contract(const ElementSet& fixed, const ElementSet& ground) const;

 private:
  Matroid(MatroidKind kind, std::vector<int> block_of,
          std::vector<int> capacities);

  MatroidKind kind_;
  std::vector<int> block_of_;
  std::vector<int> capacities_;
};

}  // namespace submod

#endif  // SUBMOD_MATROID_H_
