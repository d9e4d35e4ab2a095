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

#ifndef SUBMOD_ROUNDING_H_
#define SUBMOD_ROUNDING_H_

#include <cstdint>
#include <span>
#include <string>

#include "submod/matroid.h"
#include "submod/set_function.h"

namespace submod {

enum class RoundingMethod { kIndependent, kPipage };

std::string ToString(RoundingMethod method);

struct RoundingOutcome {
  ElementSet set;
  uint64_t seed = 0;
  RoundingMethod method = RoundingMethod::kIndependent;
};

// Coordinates within this distance of 0 or 1 are snapped before rounding.
inline constexpr double kSnapTolerance = 1e-9;

// Includes element i independently with probability x_i.
RoundingOutcome IndependentRound(std::span<const double> x, uint64_t seed);

// Randomized pipage rounding for free/uniform/partition matroids.
//
// Within each block, the two lowest-index fractional coordinates i < j are
// moved along e_i - e_j until one of them becomes integral, choosing the
// direction with probabilities that keep every coordinate a martingale. The
// block sum is preserved, so the block stays within capacity. A last
// fractional coordinate in a block (or any coordinate of an unconstrained
// element) is rounded up with probability equal to its value. The result is
// independent in `matroid` and E[1_R] = x. Throws InfeasibleError when x is
// outside the matroid polytope.
RoundingOutcome PipageRound(const Matroid& matroid, std::span<const double> x,
                            uint64_t seed);

}  // namespace submod

#endif  // SUBMOD_ROUNDING_H_
