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

#include "submod/polytope.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "submod/error.h"
#include "submod/extension.h"
#include "submod/simplex.h"

namespace submod {

PackingPolytope::PackingPolytope(int n) : upper_(n, 1.0) {
  if (n < 1) throw InvalidInputError("polytope needs n >= 1");
}

PackingPolytope PackingPolytope::Box(int n) { return PackingPolytope(n); }

PackingPolytope PackingPolytope::BoxUpper(std::vector<double> upper) {
  PackingPolytope p(static_cast<int>(upper.size()));
  CheckFractionalPoint(upper, p.size());
  p.upper_ = std::move(upper);
  return p;
}

PackingPolytope PackingPolytope::OfMatroid(const Matroid& matroid) {
  PackingPolytope p(matroid.size());
  if (matroid.kind() != MatroidKind::kFree) p.matroids_.push_back(matroid);
  return p;
}

PackingPolytope PackingPolytope::OfKnapsacks(const KnapsackSystem& knapsacks,
                                             double scale) {
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw InvalidInputError("knapsack scale must lie in (0, 1]");
  }
  PackingPolytope p(knapsacks.size());
  if (knapsacks.count() > 0) {
    p.knapsacks_.push_back(knapsacks);
    p.scales_.push_back(scale);
  }
  return p;
}

PackingPolytope PackingPolytope::Intersection(
    std::span<const PackingPolytope> parts) {
  if (parts.empty()) throw InvalidInputError("empty intersection");
  PackingPolytope p = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) p = p.Intersect(parts[i]);
  return p;
}

PackingPolytope PackingPolytope::Intersect(const PackingPolytope& other) const {
  if (other.size() != size()) {
    throw InvalidInputError("intersecting polytopes of different dimension");
  }
  PackingPolytope p = *this;
  for (int i = 0; i < size(); ++i) {
    p.upper_[i] = std::min(p.upper_[i], other.upper_[i]);
  }
  p.matroids_.insert(p.matroids_.end(), other.matroids_.begin(),
                     other.matroids_.end());
  p.knapsacks_.insert(p.knapsacks_.end(), other.knapsacks_.begin(),
                      other.knapsacks_.end());
  p.scales_.insert(p.scales_.end(), other.scales_.begin(),
                   other.scales_.end());
  return p;
}

PackingPolytope PackingPolytope::RestrictUpper(std::span<const double> u) const {
  CheckFractionalPoint(u, size());
  PackingPolytope p = *this;
  for (int i = 0; i < size(); ++i) p.upper_[i] = std::min(p.upper_[i], u[i]);
  return p;
}

bool PackingPolytope::IsMember(std::span<const double> x,
                               double tolerance) const {
  CheckFractionalPoint(x, size());
  for (int i = 0; i < size(); ++i) {
    if (x[i] > upper_[i] + tolerance) return false;
  }
  // For partition-type matroids the rank inequalities reduce to one sum per
  // block: sum_{j in block} x_j <= capacity.
  for (const Matroid& m : matroids_) {
    std::vector<double> load(m.num_blocks(), 0.0);
    for (int i = 0; i < size(); ++i) {
      if (m.block_of(i) >= 0) load[m.block_of(i)] += x[i];
    }
    for (int b = 0; b < m.num_blocks(); ++b) {
      if (load[b] > m.capacity(b) + tolerance) return false;
    }
  }
  for (size_t k = 0; k < knapsacks_.size(); ++k) {
    const KnapsackSystem& ks = knapsacks_[k];
    for (int i = 0; i < ks.count(); ++i) {
      double load = 0.0;
      for (int j = 0; j < size(); ++j) load += ks.weight(i, j) * x[j];
      if (load > scales_[k] * ks.capacity(i) + tolerance) return false;
    }
  }
  return true;
}

bool PackingPolytope::IsPureMatroid() const {
  if (!knapsacks_.empty() || matroids_.size() > 1) return false;
  return std::all_of(upper_.begin(), upper_.end(),
                     [](double u) { return u == 1.0; });
}

std::vector<double> PackingPolytope::MaximizeLinear(
    std::span<const double> c) const {
  if (static_cast<int>(c.size()) != size()) {
    throw InvalidInputError("objective dimension differs from polytope");
  }
  if (IsPureMatroid()) return GreedyMatroid(c);
  if (matroids_.empty() && knapsacks_.empty()) {
    std::vector<double> x(size(), 0.0);
    for (int i = 0; i < size(); ++i) {
      if (c[i] > 0.0) x[i] = upper_[i];
    }
    return x;
  }
  return SimplexMaximize(c);
}

std::vector<double> PackingPolytope::GreedyMatroid(
    std::span<const double> c) const {
  std::vector<int> order;
  for (int i = 0; i < size(); ++i) {
    if (c[i] > 0.0) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c[a] > c[b]; });
  std::vector<double> x(size(), 0.0);
  Membership chosen(size(), 0);
  for (int i : order) {
    if (matroids_.empty() || matroids_.front().CanAdd(chosen, i)) {
      chosen[i] = 1;
      x[i] = 1.0;
    }
  }
  return x;
}

std::vector<double> PackingPolytope::SimplexMaximize(
    std::span<const double> c) const {
  // Only coordinates with positive cost and positive room enter the LP.
  std::vector<int> vars;
  for (int i = 0; i < size(); ++i) {
    if (c[i] > 0.0 && upper_[i] > 0.0) vars.push_back(i);
  }
  std::vector<double> x(size(), 0.0);
  if (vars.empty()) return x;
  const int nv = static_cast<int>(vars.size());

  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  auto add_row = [&](std::vector<double> row, double bound) {
    if (std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; }))
      return;
    rows.push_back(std::move(row));
    rhs.push_back(std::max(0.0, bound));
  };
  for (const Matroid& m : matroids_) {
    for (int b = 0; b < m.num_blocks(); ++b) {
      std::vector<double> row(nv, 0.0);
      int members = 0;
      for (int v = 0; v < nv; ++v) {
        if (m.block_of(vars[v]) == b) {
          row[v] = 1.0;
          ++members;
        }
      }
      // A block that cannot bind adds nothing.
      if (members > m.capacity(b)) add_row(std::move(row), m.capacity(b));
    }
  }
  for (size_t k = 0; k < knapsacks_.size(); ++k) {
    const KnapsackSystem& ks = knapsacks_[k];
    for (int i = 0; i < ks.count(); ++i) {
      std::vector<double> row(nv);
      for (int v = 0; v < nv; ++v) row[v] = ks.weight(i, vars[v]);
      add_row(std::move(row), scales_[k] * ks.capacity(i));
    }
  }
  for (int v = 0; v < nv; ++v) {
    std::vector<double> row(nv, 0.0);
    row[v] = 1.0;
    add_row(std::move(row), upper_[vars[v]]);
  }
  std::vector<double> cost(nv);
  for (int v = 0; v < nv; ++v) cost[v] = c[vars[v]];

  const LpSolution lp = MaximizePackingLp(rows, rhs, cost);
  for (int v = 0; v < nv; ++v) {
    x[vars[v]] = std::clamp(lp.x[v], 0.0, upper_[vars[v]]);
  }
  if (!IsMember(x, 1e-7)) {
    throw NumericalFailureError("simplex returned a point outside the polytope");
  }
  return x;
}

std::string PackingPolytope::Describe() const {
  std::ostringstream out;
  out << "packing polytope n=" << size();
  for (const Matroid& m : matroids_) out << " matroid(" << ToString(m.kind()) << ")";
  for (const KnapsackSystem& k : knapsacks_) out << " knapsacks(" << k.count() << ")";
  const bool boxed = std::any_of(upper_.begin(), upper_.end(),
                                 [](double u) { return u < 1.0; });
  if (boxed) out << " box";
  return out.str();
}

}  // namespace submod
