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

#include "submod/matroid.h"

#include <utility>

#include "submod/error.h"

namespace submod {

std::string ToString(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kFree:
      return "free";
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
  }
  return "unknown";
}

Matroid::Matroid(MatroidKind kind, std::vector<int> block_of,
                 std::vector<int> capacities)
    : kind_(kind),
      block_of_(std::move(block_of)),
      capacities_(std::move(capacities)) {
  if (block_of_.empty()) throw InvalidInputError("matroid needs n >= 1");
  for (int b : block_of_) {
    if (b < -1 || b >= static_cast<int>(capacities_.size())) {
      throw InvalidInputError("block index out of range");
    }
  }
  for (int c : capacities_) {
    if (c < 0) throw InvalidInputError("block capacities must be >= 0");
  }
}

Matroid Matroid::Free(int n) {
  if (n < 1) throw InvalidInputError("matroid needs n >= 1");
  return Matroid(MatroidKind::kFree, std::vector<int>(n, -1), {});
}

Matroid Matroid::Uniform(int n, int rank) {
  if (n < 1) throw InvalidInputError("matroid needs n >= 1");
  if (rank < 0) throw InvalidInputError("uniform rank must be >= 0");
  return Matroid(MatroidKind::kUniform, std::vector<int>(n, 0), {rank});
}

Matroid Matroid::Partition(std::vector<int> block_of,
                           std::vector<int> capacities) {
  return Matroid(MatroidKind::kPartition, std::move(block_of),
                 std::move(capacities));
}

bool Matroid::IsIndependent(std::span<const uint8_t> membership) const {
  if (static_cast<int>(membership.size()) != size()) {
    throw InvalidInputError("membership dimension mismatch");
  }
  std::vector<int> used(capacities_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (!membership[i] || block_of_[i] < 0) continue;
    if (++used[block_of_[i]] > capacities_[block_of_[i]]) return false;
  }
  return true;
}

bool Matroid::IsIndependent(const ElementSet& set) const {
  return IsIndependent(ToMembership(size(), set));
}

int Matroid::Rank(const ElementSet& set) const {
  const Membership in = ToMembership(size(), set);
  std::vector<int> used(capacities_.size(), 0);
  int rank = 0;
  for (int i = 0; i < size(); ++i) {
    if (!in[i]) continue;
    const int b = block_of_[i];
    if (b < 0) {
      ++rank;
    } else if (used[b] < capacities_[b]) {
      ++used[b];
      ++rank;
    }
  }
  return rank;
}

bool Matroid::CanAdd(std::span<const uint8_t> membership, int element) const {
  const int b = block_of_[element];
  if (b < 0) return true;
  int used = 0;
  for (int i = 0; i < size(); ++i) {
    if (membership[i] && block_of_[i] == b) ++used;
  }
  return used + 1 <= capacities_[b];
}

Matroid Matroid::Contract(const ElementSet& fixed,
                          const ElementSet& ground) const {
  if (!IsIndependent(fixed)) {
    throw PreconditionError("can only contract an independent set");
  }
  std::vector<int> remaining = capacities_;
  for (int e : fixed) {
    if (block_of_[e] >= 0) --remaining[block_of_[e]];
  }
  const Membership in_fixed = ToMembership(size(), fixed);
  std::vector<int> local_block;
  local_block.reserve(ground.size());
  for (int e : ground) {
    if (e < 0 || e >= size()) throw InvalidElementError("ground outside matroid");
    if (in_fixed[e]) throw PreconditionError("ground overlaps contracted set");
    local_block.push_back(block_of_[e]);
  }
  if (local_block.empty()) {
    throw InvalidInputError("contraction leaves an empty ground set");
  }
  return Matroid(kind_, std::move(local_block), std::move(remaining));
}

}  // namespace submod
