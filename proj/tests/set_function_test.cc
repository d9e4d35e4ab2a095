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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "submod/error.h"
#include "submod/harness/instances.h"
#include "submod/random.h"
#include "test_util.h"

namespace submod {
namespace {

using testing::MaskToSet;

TEST(GraphCutTest, EvaluatesCuts) {
  auto k3 = testing::Triangle();
  EXPECT_DOUBLE_EQ(k3->Evaluate({0}), 2.0);
  EXPECT_DOUBLE_EQ(k3->Evaluate({}), 0.0);
  auto edge = testing::SingleEdge();
  EXPECT_DOUBLE_EQ(edge->Evaluate({0, 1}), 0.0);
}

TEST(GraphCutTest, RejectsOutOfRangeElements) {
  auto k3 = testing::Triangle();
  EXPECT_THROW(k3->Evaluate({3}), InvalidElementError);
  EXPECT_THROW(k3->Evaluate({-1}), InvalidElementError);
}

TEST(MarginalTest, Examples) {
  auto edge = testing::SingleEdge();
  EXPECT_DOUBLE_EQ(edge->Marginal({}, 0), 1.0);
  EXPECT_DOUBLE_EQ(edge->Marginal({1}, 0), -1.0);
  auto k3 = testing::Triangle();
  EXPECT_DOUBLE_EQ(k3->Marginal({0}, 1), 0.0);
}

TEST(MarginalTest, RejectsElementAlreadyPresent) {
  auto edge = testing::SingleEdge();
  EXPECT_THROW(edge->Marginal({0}, 0), PreconditionError);
}

TEST(CoverageTest, CountsCoveredWeight) {
  CoverageFunction f(3, {1.0, 2.0, 4.0}, {{0, 1}, {1, 2}, {}});
  EXPECT_DOUBLE_EQ(f.Evaluate({}), 0.0);
  EXPECT_DOUBLE_EQ(f.Evaluate({0}), 3.0);
  EXPECT_DOUBLE_EQ(f.Evaluate({0, 1}), 7.0);
  EXPECT_DOUBLE_EQ(f.Evaluate({2}), 0.0);
}

TEST(ModularTest, SumsWeights) {
  auto f = MakeModular({1.0, 2.5, 0.5});
  EXPECT_DOUBLE_EQ(f->Evaluate({0, 2}), 1.5);
  EXPECT_DOUBLE_EQ(f->Evaluate({0, 1, 2}), 4.0);
}

TEST(TableTest, IndexesByBitmask) {
  TableFunction f(2, {0.0, 1.0, 2.0, 2.5});
  EXPECT_DOUBLE_EQ(f.Evaluate({0}), 1.0);
  EXPECT_DOUBLE_EQ(f.Evaluate({1}), 2.0);
  EXPECT_DOUBLE_EQ(f.Evaluate({0, 1}), 2.5);
  EXPECT_THROW(TableFunction(2, {0.0, 1.0}), InvalidInputError);
}

TEST(TabulateTest, MatchesEvaluation) {
  auto k3 = testing::Triangle();
  std::vector<double> table = Tabulate(*k3);
  ASSERT_EQ(table.size(), 8u);
  for (uint32_t mask = 0; mask < 8; ++mask) {
    EXPECT_DOUBLE_EQ(table[mask], k3->Evaluate(MaskToSet(3, mask)));
  }
}

TEST(ComplementTest, EvaluatesOnComplement) {
  CoverageFunction f(3, {1.0, 2.0, 4.0}, {{0}, {1}, {2}});
  ComplementFunction g(f);
  EXPECT_DOUBLE_EQ(g.Evaluate({}), 7.0);
  EXPECT_DOUBLE_EQ(g.Evaluate({1}), 5.0);
}

TEST(ContractedTest, MeasuresGainOverFixedSet) {
  auto k3 = testing::Triangle();
  ContractedFunction g(*k3, {0}, {1, 2});
  EXPECT_DOUBLE_EQ(g.fixed_value(), 2.0);
  EXPECT_DOUBLE_EQ(g.Evaluate({}), 0.0);
  EXPECT_DOUBLE_EQ(g.Evaluate({0}), 0.0);    // {0,1}
  EXPECT_DOUBLE_EQ(g.Evaluate({0, 1}), -2.0);  // {0,1,2}
}

TEST(SubmodularityTest, BuiltInFamiliesPassSampledChecks) {
  Rng rng(11);
  for (auto kind : {harness::GeneratorKind::kGnpCut,
                    harness::GeneratorKind::kCoverage,
                    harness::GeneratorKind::kModular,
                    harness::GeneratorKind::kExplicitTable}) {
    for (int trial = 0; trial < 5; ++trial) {
      harness::InstanceSpec spec;
      spec.generator = kind;
      spec.n = 14;
      spec.seed = rng.NextU64();
      auto f = harness::Generate(spec);
      SubmodularityCheck check = CheckSubmodularSampled(*f, rng, 2000);
      EXPECT_EQ(check.violations, 0) << harness::ToString(kind);
      EXPECT_GE(check.min_value, 0.0);
    }
  }
}

TEST(SubmodularityTest, ExhaustiveCheckAgreesWithPairwiseDefinition) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    harness::InstanceSpec spec;
    spec.generator = harness::GeneratorKind::kExplicitTable;
    spec.n = 5;
    spec.seed = rng.NextU64();
    auto f = harness::Generate(spec);
    double worst = 0.0;
    for (uint32_t a = 0; a < 32; ++a) {
      for (uint32_t b = 0; b < 32; ++b) {
        double gap = f->Evaluate(MaskToSet(5, a)) + f->Evaluate(MaskToSet(5, b)) -
                     f->Evaluate(MaskToSet(5, a & b)) -
                     f->Evaluate(MaskToSet(5, a | b));
        worst = std::min(worst, gap);
      }
    }
    EXPECT_GE(worst, -1e-9);
    EXPECT_EQ(CheckSubmodularExhaustive(*f).violations, 0);
  }
}

TEST(SubmodularityTest, DetectsSupermodularTable) {
  // f(S) = |S|^2 is supermodular.
  TableFunction f(3, {0, 1, 1, 4, 1, 4, 4, 9});
  EXPECT_GT(CheckSubmodularExhaustive(f).violations, 0);
  EXPECT_THROW(ValidateSubmodular(f, 1), InvalidInputError);
}

TEST(SubmodularityTest, RejectsNegativeValues) {
  TableFunction f(1, {0.0, -1.0});
  EXPECT_THROW(ValidateSubmodular(f, 1), InvalidInputError);
}

}  // namespace
}  // namespace submod
