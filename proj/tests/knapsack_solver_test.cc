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

#include <vector>

#include "gtest/gtest.h"
#include "submod/error.h"
#include "submod/harness/brute_force.h"
#include "submod/harness/instances.h"
#include "submod/matroid.h"
#include "submod/random.h"
#include "test_util.h"

namespace submod {
namespace {

KnapsackSystem RandomKnapsacks(Rng& rng, int n, int k) {
  std::vector<std::vector<double>> w(k, std::vector<double>(n));
  for (auto& row : w) {
    for (double& v : row) v = rng.UniformIn(0.1, 0.6);
  }
  return KnapsackSystem(n, w, std::vector<double>(k, 1.0));
}

TEST(SolveKnapsacksTest, ModularExample) {
  auto f = MakeModular({1, 1, 1});
  KnapsackSystem k(3, {{0.4, 0.5, 0.3}}, {1.0});
  KnapsackAlgoConfig cfg;
  cfg.enum_cap = 3;
  KnapsackSolveReport r = SolveKnapsacks(*f, k, cfg);
  EXPECT_DOUBLE_EQ(r.value, 2.0);
  EXPECT_EQ(r.set.size(), 2u);
  EXPECT_TRUE(k.Packable(r.set));
  EXPECT_EQ(r.regime, GuaranteeRegime::kFull);
  EXPECT_NEAR(r.guarantee, 0.25 - 2 * cfg.epsilon, 1e-15);
}

TEST(SolveKnapsacksTest, SmallOptimumIsFoundByEnumeration) {
  auto f = MakeModular({5, 1, 1, 1});
  KnapsackSystem k(4, {{0.9, 0.4, 0.4, 0.4}}, {1.0});
  KnapsackAlgoConfig cfg;
  cfg.enum_cap = 1;
  KnapsackSolveReport r = SolveKnapsacks(*f, k, cfg);
  EXPECT_EQ(r.set, (ElementSet{0}));
  EXPECT_DOUBLE_EQ(r.value, 5.0);
  EXPECT_EQ(r.regime, GuaranteeRegime::kHeuristicEnumeration);
}

TEST(SolveKnapsacksTest, NormalizesCapacities) {
  auto f = MakeModular({1, 1, 1});
  KnapsackSystem k(3, {{4, 5, 3}}, {10.0});
  KnapsackAlgoConfig cfg;
  cfg.enum_cap = 3;
  EXPECT_DOUBLE_EQ(SolveKnapsacks(*f, k, cfg).value, 2.0);
}

TEST(SolveKnapsacksTest, DropsOversizedElements) {
  auto f = MakeModular({10, 1, 1});
  KnapsackSystem k(3, {{1.5, 0.5, 0.5}}, {1.0});
  KnapsackSolveReport r = SolveKnapsacks(*f, k, {});
  EXPECT_EQ(r.dropped, (ElementSet{0}));
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_DOUBLE_EQ(r.value, 2.0);
}

TEST(SolveKnapsacksTest, ValidatesConfiguration) {
  auto f = MakeModular({1, 1});
  KnapsackSystem one(2, {{0.5, 0.5}}, {1.0});
  KnapsackSystem two(2, {{0.5, 0.5}, {0.5, 0.5}}, {1.0, 1.0});
  KnapsackAlgoConfig cfg;
  cfg.epsilon = 0.25;
  EXPECT_THROW(SolveKnapsacks(*f, one, cfg), InvalidInputError);
  cfg.epsilon = 0.07;
  EXPECT_NO_THROW(SolveKnapsacks(*f, one, cfg));
  EXPECT_THROW(SolveKnapsacks(*f, two, cfg), InvalidInputError);
  cfg.epsilon = 0.05;
  cfg.enum_cap = kMaxEnumCap + 1;
  EXPECT_THROW(SolveKnapsacks(*f, one, cfg), InvalidInputError);
}

TEST(SolveKnapsacksTest, OutputIsAlwaysPackable) {
  Rng rng(107);
  for (int t = 0; t < 40; ++t) {
    harness::InstanceSpec spec;
    spec.generator = t % 2 ? harness::GeneratorKind::kGnpCut
                           : harness::GeneratorKind::kCoverage;
    spec.n = 8;
    spec.seed = rng.NextU64();
    auto f = harness::Generate(spec);
    KnapsackSystem k = RandomKnapsacks(rng, 8, 1 + t % 2);
    KnapsackAlgoConfig cfg;
    cfg.seed = rng.NextU64();
    KnapsackSolveReport r = SolveKnapsacks(*f, k, cfg);
    ASSERT_TRUE(k.Packable(r.set));
    EXPECT_DOUBLE_EQ(r.value, f->Evaluate(r.set));
  }
}

TEST(SolveKnapsacksTest, IsDeterministicGivenSeed) {
  Rng rng(109);
  harness::InstanceSpec spec;
  spec.n = 10;
  spec.seed = 3;
  auto f = harness::Generate(spec);
  KnapsackSystem k = RandomKnapsacks(rng, 10, 2);
  KnapsackAlgoConfig cfg;
  cfg.seed = 42;
  KnapsackSolveReport a = SolveKnapsacks(*f, k, cfg);
  KnapsackSolveReport b = SolveKnapsacks(*f, k, cfg);
  EXPECT_EQ(a.set, b.set);
  EXPECT_EQ(a.roundings, b.roundings);
}

// Two heavy items and many light ones: after seeding with a heavy item the
// light items survive pruning, so the fractional solve and rounding run.
TEST(SolveKnapsacksTest, LightItemsGoThroughRounding) {
  std::vector<double> values(10, 0.001), weights(10, 1e-5);
  values[0] = values[1] = 100.0;
  weights[0] = weights[1] = 0.4;
  auto f = MakeModular(values);
  KnapsackSystem k(10, {weights}, {1.0});
  KnapsackAlgoConfig cfg;
  cfg.epsilon = 0.2;
  KnapsackSolveReport r = SolveKnapsacks(*f, k, cfg);
  EXPECT_GT(r.fractional_solves, 0);
  EXPECT_GT(r.roundings, 0);
  EXPECT_TRUE(r.from_rounding);
  EXPECT_TRUE(k.Packable(r.set));
  EXPECT_GT(r.value, 200.0);
}

TEST(SolveMatroidAndKnapsacksTest, LightItemsGoThroughPipage) {
  std::vector<double> values(10, 0.001), weights(10, 1e-5);
  values[0] = values[1] = 100.0;
  weights[0] = weights[1] = 0.4;
  auto f = MakeModular(values);
  KnapsackSystem k(10, {weights}, {1.0});
  Matroid m = Matroid::Uniform(10, 5);
  KnapsackAlgoConfig cfg;
  cfg.epsilon = 0.2;
  KnapsackSolveReport r = SolveMatroidAndKnapsacks(*f, m, k, cfg);
  EXPECT_GT(r.fractional_solves, 0);
  EXPECT_TRUE(m.IsIndependent(r.set));
  EXPECT_TRUE(k.Packable(r.set));
  EXPECT_GT(r.value, 200.0);
}

TEST(SolveMatroidAndKnapsacksTest, FreeMatroidMatchesKnapsackSolver) {
  auto f = MakeModular({1, 1, 1});
  KnapsackSystem k(3, {{0.4, 0.5, 0.3}}, {1.0});
  KnapsackAlgoConfig cfg;
  cfg.enum_cap = 3;
  EXPECT_DOUBLE_EQ(SolveMatroidAndKnapsacks(*f, Matroid::Free(3), k, cfg).value,
                   SolveKnapsacks(*f, k, cfg).value);
}

TEST(SolveMatroidAndKnapsacksTest, RankOneModularPicksBestSingleton) {
  auto f = MakeModular({1.0, 3.0, 2.0});
  KnapsackSystem none(3, {}, {});
  KnapsackSolveReport r =
      SolveMatroidAndKnapsacks(*f, Matroid::Uniform(3, 1), none, {});
  EXPECT_EQ(r.set, (ElementSet{1}));
  EXPECT_DOUBLE_EQ(r.value, 3.0);
}

TEST(SolveMatroidAndKnapsacksTest, FeasibleWithReasonableRatio) {
  Rng rng(113);
  double total = 0.0;
  const int runs = 8;
  for (int t = 0; t < runs; ++t) {
    harness::InstanceSpec spec;
    spec.n = 8;
    spec.seed = rng.NextU64();
    auto f = harness::Generate(spec);
    KnapsackSystem k = RandomKnapsacks(rng, 8, 1);
    Matroid m = Matroid::Uniform(8, 3);
    KnapsackAlgoConfig cfg;
    cfg.seed = rng.NextU64();
    KnapsackSolveReport r = SolveMatroidAndKnapsacks(*f, m, k, cfg);
    ASSERT_TRUE(m.IsIndependent(r.set));
    ASSERT_TRUE(k.Packable(r.set));
    double opt = testing::ReferenceMax(*f, [&](const ElementSet& s) {
      return m.IsIndependent(s) && k.Packable(s);
    });
    total += opt > 0 ? r.value / opt : 1.0;
    EXPECT_NEAR(r.guarantee, CertifiedPackingFactor(1.0 / 3.0), 1e-15);
  }
  EXPECT_GE(total / runs, 0.13 - 0.02);
}

}  // namespace
}  // namespace submod
