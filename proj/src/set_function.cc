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

#include "submod/set_function.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "submod/error.h"
#include "submod/random.h"

namespace submod {

Membership ToMembership(int n, const ElementSet& set) {
  Membership membership(n, 0);
  for (int e : set) {
    if (e < 0 || e >= n) {
      throw InvalidElementError("element " + std::to_string(e) +
                                " outside ground set of size " +
                                std::to_string(n));
    }
    membership[e] = 1;
  }
  return membership;
}

ElementSet FromMembership(std::span<const uint8_t> membership) {
  ElementSet set;
  for (size_t i = 0; i < membership.size(); ++i) {
    if (membership[i]) set.push_back(static_cast<int>(i));
  }
  return set;
}

ElementSet Normalized(ElementSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

ElementSet Complement(int n, const ElementSet& set) {
  Membership in = ToMembership(n, set);
  ElementSet out;
  for (int i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

double SetFunction::Evaluate(const ElementSet& set) const {
  return ValueOf(ToMembership(size(), set));
}

double SetFunction::Marginal(const ElementSet& base, int element) const {
  Membership membership = ToMembership(size(), base);
  if (element < 0 || element >= size()) {
    throw InvalidElementError("element " + std::to_string(element) +
                              " outside ground set");
  }
  if (membership[element]) {
    throw PreconditionError("marginal of element " + std::to_string(element) +
                            " that is already in the base set");
  }
  const double without = ValueOf(membership);
  membership[element] = 1;
  return ValueOf(membership) - without;
}

GraphCutFunction::GraphCutFunction(int n, std::vector<WeightedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidInputError("ground set must be non-empty");
  for (const WeightedEdge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidElementError("edge endpoint outside ground set");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw InvalidInputError("edge weights must be finite and non-negative");
    }
  }
}

double GraphCutFunction::ValueOf(std::span<const uint8_t> membership) const {
  double cut = 0.0;
  for (const WeightedEdge& e : edges_) {
    if (membership[e.u] != membership[e.v]) cut += e.weight;
  }
  return cut;
}

CoverageFunction::CoverageFunction(int n, std::vector<double> universe_weights,
                                   std::vector<std::vector<int>> sets)
    : n_(n),
      universe_weights_(std::move(universe_weights)),
      sets_(std::move(sets)) {
  if (n < 1) throw InvalidInputError("ground set must be non-empty");
  if (static_cast<int>(sets_.size()) != n) {
    throw InvalidInputError("coverage needs one covering set per element");
  }
  for (double w : universe_weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidInputError("universe weights must be non-negative");
    }
  }
  const int universe = static_cast<int>(universe_weights_.size());
  for (const auto& s : sets_) {
    for (int item : s) {
      if (item < 0 || item >= universe) {
        throw InvalidInputError("covering set references unknown item");
      }
    }
  }
}

double CoverageFunction::ValueOf(std::span<const uint8_t> membership) const {
  // Small universes at desk scale; a byte mask per call is fine.
  std::vector<uint8_t> covered(universe_weights_.size(), 0);
  double total = 0.0;
  for (int i = 0; i < n_; ++i) {
    if (!membership[i]) continue;
    for (int item : sets_[i]) {
      if (!covered[item]) {
        covered[item] = 1;
        total += universe_weights_[item];
      }
    }
  }
  return total;
}

TableFunction::TableFunction(int n, std::vector<double> table)
    : n_(n), table_(std::move(table)) {
  if (n < 1 || n > kMaxTableElements) {
    throw BackendLimitError("explicit tables support 1 <= n <= " +
                            std::to_string(kMaxTableElements));
  }
  if (table_.size() != (size_t{1} << n)) {
    throw InvalidInputError("table must have 2^n entries");
  }
  for (double v : table_) {
    if (!std::isfinite(v)) throw InvalidInputError("table values must be finite");
  }
}

double TableFunction::ValueOf(std::span<const uint8_t> membership) const {
  uint32_t mask = 0;
  for (int i = 0; i < n_; ++i) {
    if (membership[i]) mask |= uint32_t{1} << i;
  }
  return table_[mask];
}

std::unique_ptr<CoverageFunction> MakeModular(std::vector<double> weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::vector<int>> sets(n);
  for (int i = 0; i < n; ++i) sets[i] = {i};
  return std::make_unique<CoverageFunction>(n, std::move(weights),
                                            std::move(sets));
}

double ComplementFunction::ValueOf(std::span<const uint8_t> membership) const {
  Membership flipped(membership.size());
  for (size_t i = 0; i < membership.size(); ++i) {
    flipped[i] = membership[i] ? 0 : 1;
  }
  return base_.ValueOf(flipped);
}

ContractedFunction::ContractedFunction(const SetFunction& base,
                                       ElementSet fixed, ElementSet ground)
    : base_(base),
      fixed_(Normalized(std::move(fixed))),
      ground_(Normalized(std::move(ground))) {
  scratch_template_ = ToMembership(base.size(), fixed_);
  for (int e : ground_) {
    if (e < 0 || e >= base.size()) {
      throw InvalidElementError("contracted ground outside base ground set");
    }
    if (scratch_template_[e]) {
      throw PreconditionError("contracted ground overlaps the fixed set");
    }
  }
  fixed_value_ = base_.ValueOf(scratch_template_);
}

double ContractedFunction::ValueOf(std::span<const uint8_t> membership) const {
  Membership full = scratch_template_;
  for (size_t i = 0; i < ground_.size(); ++i) {
    if (membership[i]) full[ground_[i]] = 1;
  }
  return base_.ValueOf(full) - fixed_value_;
}

std::vector<double> Tabulate(const SetFunction& f) {
  const int n = f.size();
  if (n > kMaxTableElements) {
    throw BackendLimitError("exact enumeration limited to n <= " +
                            std::to_string(kMaxTableElements) + ", got n=" +
                            std::to_string(n));
  }
  if (const auto* table = dynamic_cast<const TableFunction*>(&f)) {
    return table->table();
  }
  const uint32_t count = uint32_t{1} << n;
  std::vector<double> values(count);
  Membership membership(n, 0);
  for (uint32_t mask = 0; mask < count; ++mask) {
    for (int i = 0; i < n; ++i) membership[i] = (mask >> i) & 1u;
    values[mask] = f.ValueOf(membership);
  }
  return values;
}

SubmodularityCheck CheckSubmodularExhaustive(const SetFunction& f,
                                             double tolerance) {
  const int n = f.size();
  if (n > 12) {
    throw BackendLimitError("exhaustive submodularity check needs n <= 12");
  }
  const std::vector<double> t = Tabulate(f);
  SubmodularityCheck check;
  check.min_value = *std::min_element(t.begin(), t.end());
  // f(S+i) + f(S+j) >= f(S) + f(S+i+j) for all S and i < j outside S is
  // equivalent to submodularity.
  for (uint32_t s = 0; s < t.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1u) continue;
      for (int j = i + 1; j < n; ++j) {
        if (s >> j & 1u) continue;
        const uint32_t si = s | (1u << i);
        const uint32_t sj = s | (1u << j);
        const double gap = t[si] + t[sj] - t[s] - t[si | sj];
        ++check.tests;
        check.worst_gap = std::min(check.worst_gap, gap);
        if (gap < -tolerance) ++check.violations;
      }
    }
  }
  return check;
}

SubmodularityCheck CheckSubmodularSampled(const SetFunction& f, Rng& rng,
                                          int64_t trials, double tolerance) {
  const int n = f.size();
  SubmodularityCheck check;
  check.min_value = f.ValueOf(Membership(n, 0));
  Membership a(n), b(n), meet(n), join(n);
  for (int64_t trial = 0; trial < trials; ++trial) {
    for (int i = 0; i < n; ++i) {
      a[i] = rng.Bernoulli(0.5);
      b[i] = rng.Bernoulli(0.5);
      meet[i] = a[i] & b[i];
      join[i] = a[i] | b[i];
    }
    const double fa = f.ValueOf(a);
    const double fb = f.ValueOf(b);
    const double fm = f.ValueOf(meet);
    const double fj = f.ValueOf(join);
    check.min_value = std::min({check.min_value, fa, fb, fm, fj});
    const double gap = fa + fb - fm - fj;
    ++check.tests;
    check.worst_gap = std::min(check.worst_gap, gap);
    if (gap < -tolerance) ++check.violations;
  }
  return check;
}

void ValidateSubmodular(const SetFunction& f, uint64_t seed,
                        int64_t sampled_trials) {
  SubmodularityCheck check;
  if (f.size() <= 12) {
    check = CheckSubmodularExhaustive(f);
  } else {
    Rng rng(DeriveSeed(seed, "validate-submodular"));
    check = CheckSubmodularSampled(f, rng, sampled_trials);
  }
  if (check.min_value < -1e-9) {
    throw InvalidInputError("set function takes negative values (min " +
                            std::to_string(check.min_value) + ")");
  }
  if (check.violations > 0) {
    throw InvalidInputError("set function is not submodular: " +
                            std::to_string(check.violations) +
                            " violated inequalities, worst gap " +
                            std::to_string(check.worst_gap));
  }
}

}  // namespace submod
