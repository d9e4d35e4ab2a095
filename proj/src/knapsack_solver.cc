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

#include "submod/knapsack_solver.h"

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "submod/error.h"
#include "submod/extension.h"
#include "submod/random.h"
#include "submod/rounding.h"

namespace submod {
namespace {

// Visits every subset of `items` with at most `cap` elements, by size and
// then lexicographically.
void ForEachSmallSubset(const ElementSet& items, int cap,
                        const std::function<void(const ElementSet&)>& visit) {
  const int m = static_cast<int>(items.size());
  ElementSet subset;
  std::vector<int> pick;
  for (int size = 0; size <= std::min(cap, m); ++size) {
    pick.resize(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      subset.clear();
      for (int i : pick) subset.push_back(items[i]);
      visit(subset);
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == m - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
}

// Rounds the residual fractional problem for seed set A; returns a set of
// local ids of the residual ground set.
using ResidualSolver = std::function<ElementSet(
    const ContractedFunction& g, const ElementSet& fixed,
    const KnapsackSystem& residual, const ExtensionEstimator& estimator,
    uint64_t seed)>;

KnapsackSolveReport EnumerateSeedSets(const SetFunction& f,
                                      const KnapsackSystem& raw,
                                      const Matroid* matroid,
                                      const KnapsackAlgoConfig& config,
                                      const ResidualSolver& solve_residual) {
  const int n = f.size();
  if (raw.size() != n) {
    throw InvalidInputError("knapsack system and function sizes differ");
  }
  if (matroid != nullptr && matroid->size() != n) {
    throw InvalidInputError("matroid and function sizes differ");
  }
  config.Validate(raw.count());
  const KnapsackSystem knapsacks = raw.Normalized();
  const int k = knapsacks.count();
  const double eps = config.epsilon;

  KnapsackSolveReport report;
  report.seed = config.seed;
  report.dropped = knapsacks.OversizedElements();
  if (!report.dropped.empty()) {
    std::string list;
    for (int e : report.dropped) list += (list.empty() ? "" : ",") + std::to_string(e);
    report.warnings.push_back("dropped elements infeasible on their own: " + list);
  }
  const ElementSet candidates = Complement(n, report.dropped);
  const bool enumerates_all =
      config.enum_cap >= static_cast<int>(candidates.size()) ||
      config.enum_cap >= 1.0 / std::pow(eps, 4);
  report.regime = enumerates_all ? GuaranteeRegime::kFull
                                 : GuaranteeRegime::kHeuristicEnumeration;

  ElementSet best;
  double best_value = f.ValueOf(Membership(n, 0));
  const uint64_t rounding_seed = DeriveSeed(config.seed, "seed-set-rounding");
  const uint64_t estimator_seed = DeriveSeed(config.seed, "residual-estimator");
  const int64_t samples_override = config.samples;

  ForEachSmallSubset(candidates, config.enum_cap, [&](const ElementSet& fixed) {
    if (!knapsacks.Packable(fixed)) return;
    if (matroid != nullptr && !matroid->IsIndependent(fixed)) return;
    const int64_t index = report.seed_sets++;

    Membership in = ToMembership(n, fixed);
    const double fixed_value = f.ValueOf(in);
    if (fixed_value > best_value) {
      best_value = fixed_value;
      best = fixed;
      report.from_rounding = false;
    }

    std::vector<double> residual_capacity(k);
    const std::vector<double> loads = knapsacks.Loads(fixed);
    for (int j = 0; j < k; ++j) residual_capacity[j] = 1.0 - loads[j];

    // Prune items with a large marginal or a large size.
    const double marginal_cap = std::pow(eps, 4) * fixed_value;
    ElementSet ground;
    for (int i : candidates) {
      if (in[i]) continue;
      in[i] = 1;
      const double marginal = f.ValueOf(in) - fixed_value;
      in[i] = 0;
      if (marginal > marginal_cap) continue;
      bool heavy = false;
      for (int j = 0; j < k && !heavy; ++j) {
        heavy = knapsacks.weight(j, i) > k * std::pow(eps, 3) * residual_capacity[j];
      }
      if (!heavy) ground.push_back(i);
    }
    if (ground.empty()) return;
    ++report.fractional_solves;

    const ContractedFunction g(f, fixed, ground);
    const KnapsackSystem residual = knapsacks.Restrict(ground, residual_capacity);
    const int local_n = static_cast<int>(ground.size());
    const ExtensionEstimator estimator =
        local_n <= kMaxTableElements
            ? ExtensionEstimator::Exact()
            : ExtensionEstimator::MonteCarlo(
                  samples_override > 0
                      ? samples_override
                      : ExtensionEstimator::DefaultSampleCount(local_n),
                  DeriveSeed(estimator_seed, index));

    for (int draw = 0; draw < config.rounding_draws; ++draw) {
      const uint64_t seed = DeriveSeed(DeriveSeed(rounding_seed, index), draw);
      const ElementSet local = solve_residual(g, fixed, residual, estimator, seed);
      ElementSet combined = fixed;
      for (int e : local) combined.push_back(ground[e]);
      combined = Normalized(std::move(combined));
      ++report.roundings;
      if (!knapsacks.Packable(combined) ||
          (matroid != nullptr && !matroid->IsIndependent(combined))) {
        ++report.rounding_rejections;
        continue;
      }
      const double v = f.Evaluate(combined);
      if (v > best_value) {
        best_value = v;
        best = combined;
        report.from_rounding = true;
      }
    }
  });

  if (!knapsacks.Packable(best)) {
    throw NumericalFailureError("knapsack solver produced an unpackable set");
  }
  report.set = best;
  report.value = best_value;
  return report;
}

}  // namespace

std::string ToString(GuaranteeRegime regime) {
  return regime == GuaranteeRegime::kFull ? "full" : "heuristic-enumeration";
}

void KnapsackAlgoConfig::Validate(int knapsack_count) const {
  const double bound =
      knapsack_count >= 1 ? 1.0 / (4.0 * knapsack_count * knapsack_count) : 1.0;
  if (!(epsilon > 0.0 && epsilon < bound)) {
    throw InvalidInputError("epsilon must satisfy 0 < epsilon < 1/(4k^2) = " +
                            std::to_string(bound) + ", got " +
                            std::to_string(epsilon));
  }
  if (enum_cap < 0 || enum_cap > kMaxEnumCap) {
    throw InvalidInputError("enum_cap must lie in [0, " +
                            std::to_string(kMaxEnumCap) + "]");
  }
  if (rounding_draws < 1) {
    throw InvalidInputError("rounding_draws must be positive");
  }
  if (samples < 0) throw InvalidInputError("samples must be non-negative");
}

KnapsackSolveReport SolveKnapsacks(const SetFunction& f,
                                   const KnapsackSystem& knapsacks,
                                   const KnapsackAlgoConfig& config) {
  if (knapsacks.count() < 1) {
    throw InvalidInputError("knapsack solver needs at least one knapsack");
  }
  const double eps = config.epsilon;
  KnapsackSolveReport report = EnumerateSeedSets(
      f, knapsacks, nullptr, config,
      [&](const ContractedFunction& g, const ElementSet&,
          const KnapsackSystem& residual, const ExtensionEstimator& estimator,
          uint64_t seed) {
        const MultilinearExtension extension(g, estimator);
        const PackingPolytope polytope =
            PackingPolytope::OfKnapsacks(residual, 1.0 - eps);
        const FractionalSearchResult x =
            FractionalLocalSearch(extension, polytope, config.fractional);
        // Pipage rounding in the free matroid is independent rounding.
        return IndependentRound(x.point, seed).set;
      });
  report.guarantee = 0.25 - 2.0 * eps;
  return report;
}

KnapsackSolveReport SolveMatroidAndKnapsacks(const SetFunction& f,
                                             const Matroid& matroid,
                                             const KnapsackSystem& knapsacks,
                                             const KnapsackAlgoConfig& config) {
  const double eps = config.epsilon;
  KnapsackSolveReport report = EnumerateSeedSets(
      f, knapsacks, &matroid, config,
      [&](const ContractedFunction& g, const ElementSet& fixed,
          const KnapsackSystem& residual, const ExtensionEstimator& estimator,
          uint64_t seed) {
        const Matroid contracted = matroid.Contract(fixed, g.ground());
        PackingPolytope polytope = PackingPolytope::OfMatroid(contracted);
        if (residual.count() > 0) {
          polytope = polytope.Intersect(
              PackingPolytope::OfKnapsacks(residual, 1.0 - eps));
        }
        const MultilinearExtension extension(g, estimator);
        const PackingSolveReport x =
            SolvePacking(extension, polytope, config.packing);
        return PipageRound(contracted, x.point, seed).set;
      });
  report.guarantee = CertifiedPackingFactor(
      InnerRatio(config.packing.box.local_search.smoothing));
  return report;
}

}  // namespace submod
