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

#include "submod/local_search.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "submod/error.h"
#include "submod/harness/instances.h"
#include "submod/random.h"
#include "test_util.h"

namespace submod {
namespace {

std::unique_ptr<SetFunction> Instance(harness::GeneratorKind kind, int n,
                                      uint64_t seed) {
  harness::InstanceSpec spec;
  spec.generator = kind;
  spec.n = n;
  spec.seed = seed;
  return harness::Generate(spec);
}

double MaxOfSize(const SetFunction& f, int k) {
  return testing::ReferenceMax(
      f, [k](const ElementSet& s) { return static_cast<int>(s.size()) == k; });
}

TEST(LocalSearchCardinalityTest, Examples) {
  LocalSearchConfig cfg;
  auto edge = testing::SingleEdge();
  LocalSearchOutcome r = LocalSearchCardinality(*edge, {0, 1}, 1, cfg);
  EXPECT_EQ(r.set.size(), 1u);
  EXPECT_DOUBLE_EQ(r.value, 1.0);

  auto k3 = testing::Triangle();
  r = LocalSearchCardinality(*k3, {0, 1, 2}, 3, cfg);
  EXPECT_EQ(r.set, (ElementSet{0, 1, 2}));
  r = LocalSearchCardinality(*k3, {0, 1, 2}, 2, cfg);
  EXPECT_EQ(r.set.size(), 2u);
  EXPECT_DOUBLE_EQ(r.value, 2.0);
}

TEST(LocalSearchCardinalityTest, RejectsOversizedK) {
  auto k3 = testing::Triangle();
  EXPECT_THROW(LocalSearchCardinality(*k3, {0, 1}, 3, LocalSearchConfig{}),
               InfeasibleError);
}

TEST(LocalSearchCardinalityTest, OutputIsSwapStable) {
  Rng rng(61);
  LocalSearchConfig cfg;
  for (int t = 0; t < 20; ++t) {
    const int n = 10;
    auto f = Instance(t % 2 ? harness::GeneratorKind::kGnpCut
                            : harness::GeneratorKind::kExplicitTable,
                      n, rng.NextU64());
    const int k = 2 + t % 4;
    ElementSet ground = Complement(n, {});
    LocalSearchOutcome r = LocalSearchCardinality(*f, ground, k, cfg);
    ASSERT_EQ(static_cast<int>(r.set.size()), k);
    double limit = r.value * (1 + cfg.epsilon / (n * n * n * n)) + 1e-12;
    ElementSet outside = Complement(n, r.set);
    for (int out : r.set) {
      for (int in : outside) {
        ElementSet s = r.set;
        s.erase(std::find(s.begin(), s.end(), out));
        s.push_back(in);
        EXPECT_LE(f->Evaluate(s), limit);
      }
    }
  }
}

TEST(SecondSetTest, PathGraph) {
  auto path = testing::Path3();
  LocalSearchOutcome r = SecondSet(*path, {1}, 1, LocalSearchConfig{});
  ASSERT_EQ(r.set.size(), 1u);
  EXPECT_NE(r.set[0], 1);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
}

TEST(SecondSetTest, EmptyForbiddenMatchesLocalSearch) {
  auto f = Instance(harness::GeneratorKind::kGnpCut, 9, 5);
  LocalSearchConfig cfg;
  EXPECT_EQ(SecondSet(*f, {}, 3, cfg).set,
            LocalSearchCardinality(*f, Complement(9, {}), 3, cfg).set);
}

TEST(SecondSetTest, HalfOfAnyExtension) {
  Rng rng(67);
  LocalSearchConfig cfg;
  for (int t = 0; t < 10; ++t) {
    const int n = 6, k = 2;
    auto f = Instance(harness::GeneratorKind::kGnpCut, n, rng.NextU64());
    ElementSet s1 = LocalSearchCardinality(*f, Complement(n, {}), k, cfg).set;
    LocalSearchOutcome s2 = SecondSet(*f, s1, k, cfg);
    for (int e : s2.set) {
      ASSERT_FALSE(std::binary_search(s1.begin(), s1.end(), e));
    }
    ElementSet rest = Complement(n, s1);
    double best = 0.0;
    for (uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
      ElementSet c;
      for (size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1u) c.push_back(rest[i]);
      }
      if (static_cast<int>(c.size()) > k) continue;
      ElementSet u;
      std::set_union(s2.set.begin(), s2.set.end(), c.begin(), c.end(),
                     std::back_inserter(u));
      best = std::max(best, f->Evaluate(u));
    }
    EXPECT_GE(2 * 1.001 * s2.value, best - 1e-12);
  }
}

TEST(SolveExactCardinalityTest, Examples) {
  LocalSearchConfig cfg;
  auto edge = testing::SingleEdge();
  EXPECT_DOUBLE_EQ(SolveExactCardinality(*edge, 1, cfg).winner_value, 1.0);
  auto k3 = testing::Triangle();
  CardinalitySolveReport all = SolveExactCardinality(*k3, 3, cfg);
  EXPECT_EQ(all.winner, (ElementSet{0, 1, 2}));
  EXPECT_DOUBLE_EQ(all.winner_value, 0.0);
  EXPECT_THROW(SolveExactCardinality(*k3, 0, cfg), PreconditionError);
  EXPECT_THROW(SolveExactCardinality(*k3, 4, cfg), PreconditionError);
}

TEST(SolveExactCardinalityTest, WinnerIsBetterOfTwoDisjointSets) {
  auto f = Instance(harness::GeneratorKind::kGnpCut, 10, 71);
  CardinalitySolveReport r = SolveExactCardinality(*f, 3, LocalSearchConfig{});
  EXPECT_EQ(r.first.size(), 3u);
  EXPECT_EQ(r.second.size(), 3u);
  for (int e : r.second) {
    EXPECT_FALSE(std::binary_search(r.first.begin(), r.first.end(), e));
  }
  EXPECT_EQ(r.winner_value, std::max(r.first_value, r.second_value));
  EXPECT_FALSE(r.complemented);
}

TEST(SolveExactCardinalityTest, QuarterOfOptimum) {
  Rng rng(73);
  for (int t = 0; t < 30; ++t) {
    const int n = 8 + t % 5;
    auto f = Instance(t % 2 ? harness::GeneratorKind::kGnpCut
                            : harness::GeneratorKind::kExplicitTable,
                      n, rng.NextU64());
    const int k = 1 + static_cast<int>(rng.Below(n));
    CardinalitySolveReport r = SolveExactCardinality(*f, k, LocalSearchConfig{});
    ASSERT_EQ(static_cast<int>(r.winner.size()), k);
    EXPECT_DOUBLE_EQ(r.winner_value, f->Evaluate(r.winner));
    EXPECT_GE(r.winner_value, 0.25 * (1 - 1e-2) * MaxOfSize(*f, k));
  }
}

TEST(SolveExactCardinalityTest, ComplementTrickMatchesComplementedInstance) {
  Rng rng(79);
  LocalSearchConfig cfg;
  for (int t = 0; t < 10; ++t) {
    const int n = 10;
    auto f = Instance(harness::GeneratorKind::kExplicitTable, n, rng.NextU64());
    const int k = 6 + t % 4;
    CardinalitySolveReport direct = SolveExactCardinality(*f, k, cfg);
    EXPECT_TRUE(direct.complemented);
    ComplementFunction g(*f);
    CardinalitySolveReport comp = SolveExactCardinality(g, n - k, cfg);
    EXPECT_DOUBLE_EQ(direct.winner_value, comp.winner_value);
    EXPECT_EQ(direct.winner, Complement(n, comp.winner));
  }
}

TEST(UnconstrainedLocalSearchTest, ModularPicksPositiveElements) {
  TableFunction f(3, {1, 3, 1, 3, 0.5, 2.5, 0.5, 2.5});  // 1 + 2[0] - 0.5[2]
  LocalSearchOutcome r =
      UnconstrainedLocalSearch(f, {0, 1, 2}, LocalSearchConfig{});
  EXPECT_DOUBLE_EQ(r.value, 3.0);
  EXPECT_TRUE(std::binary_search(r.set.begin(), r.set.end(), 0));
  EXPECT_FALSE(std::binary_search(r.set.begin(), r.set.end(), 2));
}

TEST(UnconstrainedLocalSearchTest, SingleEdge) {
  auto edge = testing::SingleEdge();
  EXPECT_DOUBLE_EQ(
      UnconstrainedLocalSearch(*edge, {0, 1}, LocalSearchConfig{}).value, 1.0);
}

TEST(UnconstrainedLocalSearchTest, ThirdOfOptimum) {
  Rng rng(83);
  for (SmoothingMode mode : {SmoothingMode::kNone, SmoothingMode::kSmoothed}) {
    LocalSearchConfig cfg;
    cfg.smoothing = mode;
    for (int t = 0; t < 10; ++t) {
      auto f =
          Instance(harness::GeneratorKind::kExplicitTable, 10, rng.NextU64());
      LocalSearchOutcome r = UnconstrainedLocalSearch(*f, Complement(10, {}), cfg);
      double opt = testing::ReferenceMax(*f, [](const ElementSet&) { return true; });
      EXPECT_DOUBLE_EQ(r.value, f->Evaluate(r.set));
      EXPECT_GE(r.value, (1.0 / 3.0 - 1e-2) * opt);
    }
  }
}

TEST(UnconstrainedLocalSearchTest, InnerRatios) {
  EXPECT_DOUBLE_EQ(InnerRatio(SmoothingMode::kNone), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(InnerRatio(SmoothingMode::kSmoothed), 0.4);
}

}  // namespace
}  // namespace submod
