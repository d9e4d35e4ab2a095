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

#include "submod/rounding.h"

#include <vector>

#include "submod/error.h"
#include "submod/extension.h"
#include "submod/polytope.h"
#include "submod/random.h"

namespace submod {
namespace {

bool IsFractional(double v) { return v > 0.0 && v < 1.0; }

double Snap(double v) {
  if (v < kSnapTolerance) return 0.0;
  if (v > 1.0 - kSnapTolerance) return 1.0;
  return v;
}

}  // namespace

std::string ToString(RoundingMethod method) {
  return method == RoundingMethod::kPipage ? "pipage" : "independent";
}

RoundingOutcome IndependentRound(std::span<const double> x, uint64_t seed) {
  CheckFractionalPoint(x, static_cast<int>(x.size()));
  Rng rng(seed);
  RoundingOutcome out;
  out.seed = seed;
  out.method = RoundingMethod::kIndependent;
  for (size_t i = 0; i < x.size(); ++i) {
    // One draw per coordinate keeps the stream aligned across inputs.
    const double u = rng.Uniform();
    if (u < x[i]) out.set.push_back(static_cast<int>(i));
  }
  return out;
}

RoundingOutcome PipageRound(const Matroid& matroid, std::span<const double> x,
                            uint64_t seed) {
  const int n = matroid.size();
  CheckFractionalPoint(x, n);
  if (!PackingPolytope::OfMatroid(matroid).IsMember(x)) {
    throw InfeasibleError("point lies outside the matroid polytope");
  }
  Rng rng(seed);
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) y[i] = Snap(x[i]);

  std::vector<std::vector<int>> blocks(matroid.num_blocks());
  std::vector<int> loose;
  for (int i = 0; i < n; ++i) {
    if (matroid.block_of(i) >= 0) {
      blocks[matroid.block_of(i)].push_back(i);
    } else {
      loose.push_back(i);
    }
  }

  for (const std::vector<int>& block : blocks) {
    for (;;) {
      int first = -1;
      int second = -1;
      for (int e : block) {
        if (!IsFractional(y[e])) continue;
        if (first < 0) {
          first = e;
        } else {
          second = e;
          break;
        }
      }
      if (first < 0) break;
      if (second < 0) {
        // Single fractional coordinate: the block sum is below capacity by
        // at least its fractional part, so rounding it up stays feasible.
        y[first] = rng.Uniform() < y[first] ? 1.0 : 0.0;
        break;
      }
      // Move along e_first - e_second.
      const double up = std::min(1.0 - y[first], y[second]);
      const double down = std::min(y[first], 1.0 - y[second]);
      if (rng.Uniform() * (up + down) < down) {
        y[first] += up;
        y[second] -= up;
      } else {
        y[first] -= down;
        y[second] += down;
      }
      y[first] = Snap(y[first]);
      y[second] = Snap(y[second]);
    }
  }
  for (int e : loose) {
    if (IsFractional(y[e])) y[e] = rng.Uniform() < y[e] ? 1.0 : 0.0;
  }

  RoundingOutcome out;
  out.seed = seed;
  out.method = RoundingMethod::kPipage;
  for (int i = 0; i < n; ++i) {
    if (y[i] == 1.0) out.set.push_back(i);
  }
  if (!matroid.IsIndependent(out.set)) {
    throw NumericalFailureError("pipage rounding produced a dependent set");
  }
  return out;
}

}  // namespace submod
