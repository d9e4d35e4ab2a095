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

#include "submod/harness/properties.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <optional>

#include "submod/box_search.h"
#include "submod/continuous_greedy.h"
#include "submod/error.h"
#include "submod/extension.h"
#include "submod/harness/brute_force.h"
#include "submod/harness/instances.h"
#include "submod/matroid.h"
#include "submod/polytope.h"
#include "submod/random.h"
#include "submod/rounding.h"
#include "submod/set_function.h"

namespace submod::harness {
namespace {

constexpr double kTolerance = 1e-9;

class Tally {
 public:
  explicit Tally(SuiteResult& result) : result_(result) {
    result_.worst_margin = std::numeric_limits<double>::infinity();
  }

  // Records allowed >= tested.
  void Check(double allowed, double tested, double tolerance = kTolerance) {
    ++result_.checks;
    double margin = allowed - tested;
    result_.worst_margin = std::min(result_.worst_margin, margin);
    if (margin < -tolerance) ++result_.violations;
  }

 private:
  SuiteResult& result_;
};

std::unique_ptr<SetFunction> RandomInstance(Rng& rng, int n,
                                            GeneratorKind kind,
                                            const std::string& distribution) {
  InstanceSpec spec;
  spec.generator = kind;
  spec.n = n;
  spec.distribution = distribution;
  spec.seed = rng.NextU64();
  return Generate(spec);
}

std::unique_ptr<SetFunction> RandomNonMonotone(Rng& rng, int n) {
  return RandomInstance(rng, n,
                        rng.Bernoulli(0.5) ? GeneratorKind::kGnpCut
                                           : GeneratorKind::kExplicitTable,
                        "mixture");
}

ElementSet RandomSubset(Rng& rng, const ElementSet& pool, double p) {
  ElementSet out;
  for (int e : pool) {
    if (rng.Bernoulli(p)) out.push_back(e);
  }
  return out;
}

Matroid RandomMatroid(Rng& rng, int n) {
  if (rng.Bernoulli(0.5)) {
    return Matroid::Uniform(n, 1 + static_cast<int>(rng.Below(n - 1)));
  }
  int blocks = 2 + static_cast<int>(rng.Below(2));
  std::vector<int> block_of(n);
  for (int i = 0; i < n; ++i) block_of[i] = i % blocks;
  std::vector<int> caps(blocks);
  for (int b = 0; b < blocks; ++b) {
    int members = (n - b + blocks - 1) / blocks;
    caps[b] = 1 + static_cast<int>(rng.Below(std::max(1, members - 1)));
  }
  return Matroid::Partition(block_of, caps);
}

// Uniform coordinates scaled down block by block into P(M).
std::vector<double> RandomMatroidPoint(Rng& rng, const Matroid& m) {
  const int n = m.size();
  std::vector<double> x(n);
  for (double& v : x) v = rng.Uniform();
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[m.block_of(i)].push_back(i);
  for (const auto& [block, members] : blocks) {
    if (block < 0) continue;
    double sum = 0.0;
    for (int i : members) sum += x[i];
    double cap = m.capacity(block);
    if (sum > cap) {
      for (int i : members) x[i] *= cap / sum;
    }
  }
  return x;
}

void ThreeSets(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  std::vector<std::unique_ptr<SetFunction>> pool;
  const int pool_size = static_cast<int>(std::min<int64_t>(result.trials, 24));
  for (int i = 0; i < pool_size; ++i) {
    int n = 4 + static_cast<int>(rng.Below(13));  // 4..16
    GeneratorKind kind = i % 3 == 0   ? GeneratorKind::kGnpCut
                         : i % 3 == 1 ? GeneratorKind::kCoverage
                                      : GeneratorKind::kExplicitTable;
    if (kind == GeneratorKind::kExplicitTable) n = std::min(n, 12);
    pool.push_back(RandomInstance(rng, n, kind, "mixture"));
  }
  for (int64_t t = 0; t < result.trials; ++t) {
    const SetFunction& f = *pool[t % pool_size];
    const int n = f.size();
    ElementSet ground = Complement(n, {});
    ElementSet c = RandomSubset(rng, ground, rng.Uniform());
    ElementSet s1 = RandomSubset(rng, ground, rng.Uniform());
    ElementSet s2 = RandomSubset(rng, Complement(n, s1), rng.Uniform());
    ElementSet c_prime, s1_or_c, s1_and_c, s2_or_cp;
    std::set_difference(c.begin(), c.end(), s1.begin(), s1.end(),
                        std::back_inserter(c_prime));
    std::set_union(s1.begin(), s1.end(), c.begin(), c.end(),
                   std::back_inserter(s1_or_c));
    std::set_intersection(s1.begin(), s1.end(), c.begin(), c.end(),
                          std::back_inserter(s1_and_c));
    std::set_union(s2.begin(), s2.end(), c_prime.begin(), c_prime.end(),
                   std::back_inserter(s2_or_cp));
    tally.Check(f.Evaluate(s1_or_c) + f.Evaluate(s1_and_c) +
                    f.Evaluate(s2_or_cp),
                f.Evaluate(c));
  }
}

void Submodularity(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  const GeneratorKind kinds[] = {GeneratorKind::kGnpCut,
                                 GeneratorKind::kCoverage,
                                 GeneratorKind::kModular,
                                 GeneratorKind::kExplicitTable};
  for (int64_t t = 0; t < result.trials; ++t) {
    int n = 2 + static_cast<int>(rng.Below(9));  // 2..10
    std::unique_ptr<SetFunction> f =
        RandomInstance(rng, n, kinds[t % 4],
                       rng.Bernoulli(0.5) ? "mixture" : "monotone");
    SubmodularityCheck check = CheckSubmodularExhaustive(*f);
    result.checks += check.tests;
    result.violations += check.violations;
    result.worst_margin = std::min(result.worst_margin, -check.worst_gap);
    tally.Check(check.min_value, 0.0);
  }
}

void RoundingMarginals(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  struct Case {
    std::optional<Matroid> matroid;  // none: independent rounding
    std::vector<double> x;
  };
  std::vector<Case> cases;
  for (int c = 0; c < 4; ++c) {
    int n = 8 + 2 * c;
    if (c == 3) {
      std::vector<double> x(n);
      for (double& v : x) v = rng.Uniform();
      cases.push_back({std::nullopt, x});
    } else {
      Matroid m = c == 0 ? Matroid::Uniform(n, n / 3) : RandomMatroid(rng, n);
      cases.push_back({m, RandomMatroidPoint(rng, m)});
    }
  }
  const double trials = static_cast<double>(result.trials);
  for (size_t c = 0; c < cases.size(); ++c) {
    const Case& cs = cases[c];
    std::vector<int64_t> hits(cs.x.size(), 0);
    uint64_t base = DeriveSeed(seed, c + 1);
    for (int64_t t = 0; t < result.trials; ++t) {
      uint64_t s = DeriveSeed(base, static_cast<uint64_t>(t));
      RoundingOutcome r = cs.matroid ? PipageRound(*cs.matroid, cs.x, s)
                                     : IndependentRound(cs.x, s);
      for (int e : r.set) ++hits[e];
    }
    for (size_t i = 0; i < cs.x.size(); ++i) {
      double p = cs.x[i];
      double sigma = std::sqrt(p * (1 - p) / trials);
      tally.Check(4 * sigma, std::abs(hits[i] / trials - p), 1e-12);
    }
  }
}

void RoundingExpectation(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  const int sizes[] = {8, 10, 12, 8, 10, 12};
  for (int c = 0; c < 6; ++c) {
    const int n = sizes[c];
    std::unique_ptr<SetFunction> source =
        c % 2 == 0 ? RandomNonMonotone(rng, n)
                   : RandomInstance(rng, n, GeneratorKind::kCoverage, "mixture");
    TableFunction f(n, Tabulate(*source));
    Matroid m = RandomMatroid(rng, n);
    std::vector<double> x = RandomMatroidPoint(rng, m);
    double fx = MultilinearExtension(f, ExtensionEstimator::Exact()).Value(x);
    double sum = 0.0, sum_sq = 0.0;
    uint64_t base = DeriveSeed(seed, static_cast<uint64_t>(c + 1));
    for (int64_t t = 0; t < result.trials; ++t) {
      RoundingOutcome r =
          PipageRound(m, x, DeriveSeed(base, static_cast<uint64_t>(t)));
      double v = f.Evaluate(r.set);
      sum += v;
      sum_sq += v * v;
    }
    const double trials = static_cast<double>(result.trials);
    double mean = sum / trials;
    double var = std::max(0.0, sum_sq / trials - mean * mean);
    double sigma_hat = std::sqrt(var / trials);
    tally.Check(mean + 4 * sigma_hat, fx);
  }
}

void RoundingTail(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  const double deltas[] = {0.2, 0.5, 1.0};
  const double trials = static_cast<double>(result.trials);
  for (int pair = 0; pair < 20; ++pair) {
    const int n = 12 + static_cast<int>(rng.Below(13));  // 12..24
    std::optional<Matroid> matroid;
    std::vector<double> x(n);
    if (pair < 10) {
      matroid = RandomMatroid(rng, n);
      x = RandomMatroidPoint(rng, *matroid);
    } else {
      for (double& v : x) v = rng.Uniform() * (pair % 2 == 0 ? 0.5 : 1.0);
    }
    std::vector<double> a(n);
    for (double& v : a) v = rng.Bernoulli(0.3) ? 1.0 : rng.Uniform();
    double mu = 0.0;
    for (int i = 0; i < n; ++i) mu += a[i] * x[i];
    std::vector<int64_t> exceed(3, 0);
    uint64_t base = DeriveSeed(seed, static_cast<uint64_t>(pair + 1));
    for (int64_t t = 0; t < result.trials; ++t) {
      uint64_t s = DeriveSeed(base, static_cast<uint64_t>(t));
      RoundingOutcome r =
          matroid ? PipageRound(*matroid, x, s) : IndependentRound(x, s);
      double sum = 0.0;
      for (int e : r.set) sum += a[e];
      for (int d = 0; d < 3; ++d) {
        if (sum >= (1 + deltas[d]) * mu - 1e-12) ++exceed[d];
      }
    }
    for (int d = 0; d < 3; ++d) {
      double p = exceed[d] / trials;
      double half_width = 1.96 * std::sqrt(p * (1 - p) / trials);
      double bound = std::exp(-mu * deltas[d] * deltas[d] / 3.0);
      tally.Check(bound + 3 * half_width, p, 0.0);
    }
  }
}

void BoxSearch(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  BoxSearchConfig config;
  const double beta = InnerRatio(config.local_search.smoothing);
  for (int64_t t = 0; t < result.trials; ++t) {
    const int n = 3 + static_cast<int>(rng.Below(6));  // 3..8
    std::unique_ptr<SetFunction> f =
        t % 3 == 2 ? RandomInstance(rng, n, GeneratorKind::kCoverage, "mixture")
                   : RandomNonMonotone(rng, n);
    std::vector<double> upper(n);
    for (double& u : upper) u = rng.Bernoulli(0.3) ? 1.0 : rng.Uniform();
    MultilinearExtension ext(*f, ExtensionEstimator::Exact());
    config.local_search.seed = rng.NextU64();
    BoxSearchResult y = MaximizeOverBox(ext, upper, config);
    // F is multilinear, so its maximum over the grid points of the box is
    // attained at a corner of the grid box.
    std::vector<double> grid_top(n);
    for (int i = 0; i < n; ++i) grid_top[i] = y.copies[i] * y.granularity;
    double grid_opt = MaxOverBox(*f, grid_top).value;
    double eps_prime = 1e-2 * std::max(0.0, grid_opt);
    tally.Check(y.value / beta + y.f_max / (4.0 * n * n) + eps_prime,
                grid_opt);
  }
}

void GreedyTrajectory(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  const double c = 1.0 - 1.0 / std::numbers::e;
  for (int64_t t = 0; t < result.trials; ++t) {
    const int n = 4 + static_cast<int>(rng.Below(7));  // 4..10
    std::unique_ptr<SetFunction> f = RandomNonMonotone(rng, n);
    Matroid m = RandomMatroid(rng, n);
    MultilinearExtension ext(*f, ExtensionEstimator::Exact());
    const int steps = DefaultGreedySteps(n);
    GreedyRunResult run =
        ContinuousGreedy(ext, PackingPolytope::OfMatroid(m), steps);
    std::vector<double> x = BruteForceMatroidPolytopeGrid(*f, m, 0.05).point;
    std::vector<double> join(n);
    for (int i = 0; i < n; ++i) join[i] = std::max(x[i], run.final_point[i]);
    double slack = 2.0 / steps * MaxAbsValue(*f);
    tally.Check(ext.Value(run.final_point) + slack,
                c * (ext.Value(join) - run.dmax_value));
  }
}

void GreedyMonotone(SuiteResult& result, uint64_t seed) {
  Tally tally(result);
  Rng rng(seed);
  const double c = 1.0 - 1.0 / std::numbers::e - 0.02;
  for (int64_t t = 0; t < result.trials; ++t) {
    const int n = 4 + static_cast<int>(rng.Below(7));  // 4..10
    std::unique_ptr<SetFunction> f = RandomInstance(
        rng, n, t % 2 == 0 ? GeneratorKind::kCoverage : GeneratorKind::kModular,
        "monotone");
    Matroid m = Matroid::Uniform(n, 1 + static_cast<int>(rng.Below(n - 1)));
    MultilinearExtension ext(*f, ExtensionEstimator::Exact());
    GreedyRunResult run = ContinuousGreedy(ext, PackingPolytope::OfMatroid(m),
                                           DefaultGreedySteps(n));
    double opt = BruteForceMatroidPolytopeGrid(*f, m, 0.05).value;
    tally.Check(ext.Value(run.final_point), c * opt);
  }
}

using SuiteFn = std::function<void(SuiteResult&, uint64_t)>;

const std::vector<std::pair<std::string, SuiteFn>>& Registry() {
  static const auto* registry =
      new std::vector<std::pair<std::string, SuiteFn>>{
          {"three-sets", ThreeSets},
          {"submodularity", Submodularity},
          {"rounding-marginals", RoundingMarginals},
          {"rounding-expectation", RoundingExpectation},
          {"rounding-tail", RoundingTail},
          {"box-search", BoxSearch},
          {"greedy-trajectory", GreedyTrajectory},
          {"greedy-monotone", GreedyMonotone},
      };
  return *registry;
}

}  // namespace

std::vector<std::string> SuiteNames() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : Registry()) names.push_back(name);
  return names;
}

SuiteResult VerifyProperties(const std::string& suite, int64_t trials,
                             uint64_t seed) {
  const SuiteFn* fn = nullptr;
  for (const auto& [name, f] : Registry()) {
    if (name == suite) fn = &f;
  }
  if (fn == nullptr) {
    std::string known;
    for (const std::string& name : SuiteNames()) known += " " + name;
    throw InvalidInputError("unknown suite '" + suite + "'; known:" + known);
  }
  if (trials < 0) throw InvalidInputError("trials must be non-negative");
  SuiteResult result;
  result.name = suite;
  result.trials = trials;
  if (trials == 0) {
    result.vacuous = true;
    result.notes.push_back("warning: zero trials, nothing was checked");
    return result;
  }
  (*fn)(result, DeriveSeed(seed, TagHash(suite)));
  if (result.checks == 0) result.worst_margin = 0.0;
  result.passed = result.violations == 0;
  return result;
}

}  // namespace submod::harness
