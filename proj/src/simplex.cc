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

#include "submod/simplex.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "submod/error.h"

namespace submod {
namespace {

constexpr double kPivotTolerance = 1e-12;
constexpr double kCostTolerance = 1e-12;

class PivotGuardExceeded {};

LpSolution Solve(const std::vector<std::vector<double>>& a,
                 std::span<const double> b, std::span<const double> c,
                 PivotRule rule, int max_pivots) {
  const int rows = static_cast<int>(a.size());
  const int vars = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != rows) {
    throw InvalidInputError("right-hand side length differs from row count");
  }
  if (rows + vars > kMaxLpDimension) {
    throw BackendLimitError("dense simplex limited to rows + variables <= " +
                            std::to_string(kMaxLpDimension));
  }
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(a[r].size()) != vars) {
      throw InvalidInputError("constraint row length differs from c");
    }
    if (!(b[r] >= 0.0)) throw InvalidInputError("packing LP needs b >= 0");
  }

  // Columns 0..vars-1 structural, vars..vars+rows-1 slack; last column rhs.
  const int cols = vars + rows;
  std::vector<std::vector<double>> t(rows, std::vector<double>(cols + 1, 0.0));
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < vars; ++j) t[r][j] = a[r][j];
    t[r][vars + r] = 1.0;
    t[r][cols] = b[r];
  }
  // Reduced costs for maximization: entering candidates have cost > 0.
  std::vector<double> cost(cols + 1, 0.0);
  for (int j = 0; j < vars; ++j) cost[j] = c[j];
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = vars + r;

  LpSolution solution;
  for (;;) {
    int enter = -1;
    double best = kCostTolerance;
    for (int j = 0; j < cols; ++j) {
      if (cost[j] > best) {
        enter = j;
        if (rule == PivotRule::kBland) break;
        best = cost[j];
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      if (t[r][enter] <= kPivotTolerance) continue;
      const double ratio = t[r][cols] / t[r][enter];
      if (leave < 0 || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 &&
           basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw NumericalFailureError("linear program is unbounded");
    if (++solution.pivots > max_pivots) throw PivotGuardExceeded();

    const double pivot = t[leave][enter];
    for (double& v : t[leave]) v /= pivot;
    for (int r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double factor = t[r][enter];
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols; ++j) t[r][j] -= factor * t[leave][j];
    }
    const double factor = cost[enter];
    for (int j = 0; j <= cols; ++j) cost[j] -= factor * t[leave][j];
    basis[leave] = enter;
  }

  solution.x.assign(vars, 0.0);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < vars) solution.x[basis[r]] = std::max(0.0, t[r][cols]);
  }
  for (int j = 0; j < vars; ++j) solution.objective += c[j] * solution.x[j];
  return solution;
}

}  // namespace

LpSolution MaximizePackingLp(const std::vector<std::vector<double>>& a,
                             std::span<const double> b,
                             std::span<const double> c, PivotRule rule,
                             int max_pivots) {
  try {
    return Solve(a, b, c, rule, max_pivots);
  } catch (const PivotGuardExceeded&) {
    throw NumericalFailureError("simplex exceeded its pivot guard");
  }
}

LpSolution MaximizePackingLp(const std::vector<std::vector<double>>& a,
                             std::span<const double> b,
                             std::span<const double> c) {
  const int guard = 50 * (static_cast<int>(a.size()) +
                          static_cast<int>(c.size()) + 1);
  try {
    return Solve(a, b, c, PivotRule::kDantzig, guard);
  } catch (const PivotGuardExceeded&) {
  }
  try {
    LpSolution s = Solve(a, b, c, PivotRule::kBland, 4 * guard);
    s.used_bland = true;
    return s;
  } catch (const PivotGuardExceeded&) {
    throw NumericalFailureError("simplex exceeded its pivot guard under "
                                "both Dantzig and Bland pricing");
  }
}

}  // namespace submod
