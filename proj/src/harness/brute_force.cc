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

#include "submod/harness/brute_force.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>

#include "submod/error.h"
#include "submod/extension.h"

namespace submod::harness {
namespace {

void CheckSize(const SetFunction& f) {
  if (f.size() > kMaxBruteForceElements) {
    throw BackendLimitError("brute force limited to n <= " +
                            std::to_string(kMaxBruteForceElements) +
                            ", got n=" + std::to_string(f.size()));
  }
}

ElementSet MaskToSet(uint32_t mask, int n) {
  ElementSet s;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1u) s.push_back(i);
  }
  return s;
}

// Scans all subsets accepted by `feasible`, keeping the largest value and
// the lexicographically least witness among ties.
BruteForceResult ScanSubsets(const SetFunction& f,
                             const std::function<bool(uint32_t)>& feasible,
                             const char* method) {
  CheckSize(f);
  const int n = f.size();
  const std::vector<double> table = Tabulate(f);
  BruteForceResult result;
  result.method = method;
  bool found = false;
  for (uint32_t mask = 0; mask < table.size(); ++mask) {
    if (!feasible(mask)) continue;
    ++result.evaluated;
    const double v = table[mask];
    if (!found || v > result.value) {
      found = true;
      result.value = v;
      result.witness = MaskToSet(mask, n);
    } else if (v == result.value) {
      ElementSet s = MaskToSet(mask, n);
      if (s < result.witness) result.witness = std::move(s);
    }
  }
  if (!found) throw InfeasibleError("no feasible set");
  result.point.assign(n, 0.0);
  for (int e : result.witness) result.point[e] = 1.0;
  return result;
}

}  // namespace

BruteForceResult BruteForceCardinality(const SetFunction& f, int k) {
  if (k < 0 || k > f.size()) throw InfeasibleError("no set of size k");
  return ScanSubsets(
      f, [k](uint32_t mask) { return std::popcount(mask) == k; },
      "subsets-of-size-k");
}

BruteForceResult BruteForceKnapsacks(const SetFunction& f,
                                     const KnapsackSystem& knapsacks) {
  const int n = f.size();
  Membership m(n);
  return ScanSubsets(
      f,
      [&](uint32_t mask) {
        for (int i = 0; i < n; ++i) m[i] = mask >> i & 1u;
        return knapsacks.Packable(m);
      },
      "packable-subsets");
}

BruteForceResult BruteForceMatroid(const SetFunction& f, const Matroid& matroid,
                                   const std::optional<KnapsackSystem>& knapsacks) {
  const int n = f.size();
  Membership m(n);
  return ScanSubsets(
      f,
      [&](uint32_t mask) {
        for (int i = 0; i < n; ++i) m[i] = mask >> i & 1u;
        return matroid.IsIndependent(m) && (!knapsacks || knapsacks->Packable(m));
      },
      "independent-subsets");
}

BruteForceResult BruteForceUnconstrained(const SetFunction& f) {
  return ScanSubsets(f, [](uint32_t) { return true; }, "all-subsets");
}

int64_t GridPointCount(int n, double resolution) {
  const int64_t levels =
      static_cast<int64_t>(std::floor(1.0 / resolution + 1e-9)) + 1;
  int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > kMaxGridPoints * 1000 / levels) return -1;
    total *= levels;
  }
  return total;
}

BruteForceResult BruteForcePackingGrid(const SetFunction& f,
                                       const PackingPolytope& polytope,
                                       double resolution) {
  const int n = f.size();
  if (!(resolution > 0.0 && resolution <= 1.0)) {
    throw InvalidInputError("grid resolution must lie in (0, 1]");
  }
  const int64_t points = GridPointCount(n, resolution);
  if (points < 0 || points > kMaxGridPoints) {
    throw BackendLimitError("grid search limited to " +
                            std::to_string(kMaxGridPoints) + " points");
  }
  const MultilinearExtension extension(f, ExtensionEstimator::Exact());
  const int top = static_cast<int>(std::floor(1.0 / resolution + 1e-9));
  std::vector<int> level(n, 0);
  std::vector<double> x(n, 0.0);
  BruteForceResult result;
  result.method = "exhaustive-grid";
  result.point = x;
  result.value = extension.Value(x);
  result.evaluated = 1;
  // Odometer over the grid. Down-monotonicity lets us reset a coordinate as
  // soon as raising it leaves P.
  for (;;) {
    int pos = 0;
    while (pos < n) {
      if (level[pos] < top) {
        ++level[pos];
        x[pos] = std::min(1.0, level[pos] * resolution);
        if (polytope.IsMember(x)) break;
      }
      level[pos] = 0;
      x[pos] = 0.0;
      ++pos;
    }
    if (pos == n) break;
    ++result.evaluated;
    const double v = extension.Value(x);
    if (v > result.value) {
      result.value = v;
      result.point = x;
    }
  }
  return result;
}

BruteForceResult BruteForceMatroidPolytopeGrid(const SetFunction& f,
                                               const Matroid& matroid,
                                               double resolution) {
  const int64_t points = GridPointCount(f.size(), resolution);
  if (points >= 0 && points <= kMaxGridPoints) {
    return BruteForcePackingGrid(f, PackingPolytope::OfMatroid(matroid),
                                 resolution);
  }
  BruteForceResult r = BruteForceMatroid(f, matroid);
  r.method = "integral-reduction";
  return r;
}

BruteForceResult MaxOverBox(const SetFunction& f,
                            std::span<const double> upper) {
  const int n = f.size();
  CheckFractionalPoint(upper, n);
  const MultilinearExtension extension(f, ExtensionEstimator::Exact());
  BruteForceResult result;
  result.method = "box-corners";
  std::vector<double> x(n);
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) x[i] = (mask >> i & 1u) ? upper[i] : 0.0;
    const double v = extension.Value(x);
    ++result.evaluated;
    if (mask == 0 || v > result.value) {
      result.value = v;
      result.point = x;
    }
  }
  return result;
}

double MaxAbsValue(const SetFunction& f) {
  double best = 0.0;
  for (double v : Tabulate(f)) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace submod::harness
