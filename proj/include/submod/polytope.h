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

#ifndef SUBMOD_POLYTOPE_H_
#define SUBMOD_POLYTOPE_H_

#include <span>
#include <string>
#include <vector>

#include "submod/knapsack.h"
#include "submod/matroid.h"

namespace submod {

// Tolerance for membership tests on floating-point points.
inline constexpr double kMembershipTolerance = 1e-9;

// A down-monotone polytope P in [0,1]^n, stored as an intersection of
//   - coordinate upper bounds x <= u (u in [0,1]^n, the box),
//   - matroid polytopes of free/uniform/partition matroids, and
//   - knapsack rows sum_j w_ij x_j <= scale * C_i.
// Every component contains the origin and is closed under decreasing
// coordinates, so the intersection is a packing polytope. Instances are
// immutable values.
class PackingPolytope {
 public:
  static PackingPolytope Box(int n);
  static PackingPolytope BoxUpper(std::vector<double> upper);
  static PackingPolytope OfMatroid(const Matroid& matroid);
  // scale in (0, 1] shrinks every capacity.
  static PackingPolytope OfKnapsacks(const KnapsackSystem& knapsacks,
                                     double scale = 1.0);
  static PackingPolytope Intersection(std::span<const PackingPolytope> parts);

  int size() const { return static_cast<int>(upper_.size()); }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<Matroid>& matroids() const { return matroids_; }
  const std::vector<KnapsackSystem>& knapsacks() const { return knapsacks_; }
  const std::vector<double>& knapsack_scales() const { return scales_; }

  PackingPolytope Intersect(const PackingPolytope& other) const;

  // P intersected with {y : y_i <= u_i}.
  PackingPolytope RestrictUpper(std::span<const double> u) const;

  // Throws InvalidInputError on a dimension mismatch or a coordinate
  // outside [0, 1].
  bool IsMember(std::span<const double> x,
                double tolerance = kMembershipTolerance) const;

  // A maximizer of c.x over P. Coordinates with c_i <= 0 are zero. A lone
  // matroid under the unit box uses the greedy algorithm; everything else
  // goes through the dense simplex. Ties go to the lower element index.
  std::vector<double> MaximizeLinear(std::span<const double> c) const;

  // True when the polytope is the matroid polytope of a single matroid (or
  // the unit box), so the greedy algorithm is exact.
  bool IsPureMatroid() const;

  std::string Describe() const;

 private:
  explicit PackingPolytope(int n);

  std::vector<double> GreedyMatroid(std::span<const double> c) const;
  std::vector<double> SimplexMaximize(std::span<const double> c) const;

  std::vector<double> upper_;
  std::vector<Matroid> matroids_;
  std::vector<KnapsackSystem> knapsacks_;
  std::vector<double> scales_;
};

}  // namespace submod

#endif  // SUBMOD_POLYTOPE_H_
