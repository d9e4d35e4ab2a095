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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "submod/error.h"
#include "submod/extension.h"
#include "submod/matroid.h"
#include "submod/random.h"
#include "test_util.h"

namespace submod {
namespace {

constexpr int kSeeds = 100000;

TEST(IndependentRoundTest, IntegralPointsAreFixed) {
  std::vector<double> x = {1, 0, 1, 1, 0};
  EXPECT_EQ(IndependentRound(x, 9).set, (ElementSet{0, 2, 3}));
  std::vector<double> zero(4, 0.0);
  EXPECT_TRUE(IndependentRound(zero, 9).set.empty());
}

TEST(IndependentRoundTest, IsDeterministicGivenSeed) {
  std::vector<double> x = {0.3, 0.6, 0.5, 0.9};
  EXPECT_EQ(IndependentRound(x, 5).set, IndependentRound(x, 5).set);
  EXPECT_EQ(IndependentRound(x, 5).method, RoundingMethod::kIndependent);
}

TEST(IndependentRoundTest, PreservesExpectation) {
  auto edge = testing::SingleEdge();
  std::vector<double> x = {0.5, 0.5};
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < kSeeds; ++s) {
    double v = edge->Evaluate(IndependentRound(x, DeriveSeed(1, s)).set);
    sum += v;
    sum_sq += v * v;
  }
  double mean = sum / kSeeds;
  double sigma = std::sqrt((sum_sq / kSeeds - mean * mean) / kSeeds);
  EXPECT_NEAR(mean, 0.5, 4 * sigma);
}

TEST(PipageRoundTest, IntegralIndependentPointsAreFixed) {
  Matroid u = Matroid::Uniform(4, 2);
  std::vector<double> x = {0, 1, 0, 1};
  EXPECT_EQ(PipageRound(u, x, 3).set, (ElementSet{1, 3}));
  Matroid p = Matroid::Partition({0, 0, 1, 1}, {1, 1});
  std::vector<double> y = {1, 0, 0, 1};
  EXPECT_EQ(PipageRound(p, y, 3).set, (ElementSet{0, 3}));
  EXPECT_EQ(PipageRound(p, y, 3).method, RoundingMethod::kPipage);
}

TEST(PipageRoundTest, RankOneSplitsEvenly) {
  Matroid rank1 = Matroid::Uniform(2, 1);
  std::vector<double> x = {0.5, 0.5};
  int first = 0;
  for (int s = 0; s < kSeeds; ++s) {
    ElementSet r = PipageRound(rank1, x, DeriveSeed(2, s)).set;
    ASSERT_EQ(r.size(), 1u);
    if (r[0] == 0) ++first;
  }
  double sigma = std::sqrt(0.25 / kSeeds);
  EXPECT_NEAR(static_cast<double>(first) / kSeeds, 0.5, 4 * sigma);
}

TEST(PipageRoundTest, RejectsPointsOutsideThePolytope) {
  Matroid u = Matroid::Uniform(3, 1);
  std::vector<double> x = {0.6, 0.6, 0.0};
  EXPECT_THROW(PipageRound(u, x, 1), InfeasibleError);
}

TEST(PipageRoundTest, OutputIsIndependentAndMarginalsArePreserved) {
  Matroid p = Matroid::Partition({0, 0, 0, 1, 1, 1, 1, -1}, {2, 1});
  std::vector<double> x = {0.7, 0.6, 0.5, 0.3, 0.25, 0.2, 0.15, 0.4};
  std::vector<int> hits(x.size(), 0);
  for (int s = 0; s < kSeeds; ++s) {
    ElementSet r = PipageRound(p, x, DeriveSeed(3, s)).set;
    ASSERT_TRUE(p.IsIndependent(r));
    for (int e : r) ++hits[e];
  }
  for (size_t i = 0; i < x.size(); ++i) {
    double sigma = std::sqrt(x[i] * (1 - x[i]) / kSeeds);
    EXPECT_NEAR(static_cast<double>(hits[i]) / kSeeds, x[i], 4 * sigma) << i;
  }
}

TEST(PipageRoundTest, ExpectationIsAtLeastExtensionValue) {
  // f(S) = min(|S|, 2): concave in |S|, so pipage's negative correlation
  // helps; E f(R) >= F(x).
  TableFunction f(4, {0, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2});
  Matroid u = Matroid::Uniform(4, 3);
  std::vector<double> x = {0.5, 0.5, 0.5, 0.5};
  double fx = ExtensionEstimator::Exact().Value(f, x);
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < kSeeds; ++s) {
    double v = f.Evaluate(PipageRound(u, x, DeriveSeed(4, s)).set);
    sum += v;
    sum_sq += v * v;
  }
  double mean = sum / kSeeds;
  double sigma = std::sqrt((sum_sq / kSeeds - mean * mean) / kSeeds);
  EXPECT_GE(mean, fx - 4 * sigma);
  // Here rounding keeps exactly two elements, so the mean is 2.
  EXPECT_NEAR(mean, 2.0, 1e-12);
  EXPECT_LT(fx, 2.0);
}

// Small items under a (1 - eps)-shrunk capacity, rounded independently:
// any overflow is rare, below k exp(-1/(4 k eps)).
TEST(IndependentRoundTest, KnapsackOverflowIsRare) {
  const int k = 1;
  const double eps = 0.2;
  const int n = 200;
  std::vector<double> w(n, k * eps * eps * eps);  // the pruning threshold
  std::vector<double> x(n, 0.5);                   // load (1 - eps)
  int overflow = 0;
  const int seeds = 20000;
  for (int s = 0; s < seeds; ++s) {
    double load = 0.0;
    for (int e : IndependentRound(x, DeriveSeed(5, s)).set) load += w[e];
    if (load > 1.0 + 1e-12) ++overflow;
  }
  EXPECT_LE(static_cast<double>(overflow) / seeds,
            k * std::exp(-1.0 / (4 * k * eps)));
}

}  // namespace
}  // namespace submod
