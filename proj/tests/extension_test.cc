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

#include "submod/extension.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "submod/error.h"
#include "submod/harness/instances.h"
#include "submod/random.h"
#include "test_util.h"

namespace submod {
namespace {

std::unique_ptr<SetFunction> RandomFunction(uint64_t seed, int n,
                                            harness::GeneratorKind kind) {
  harness::InstanceSpec spec;
  spec.generator = kind;
  spec.n = n;
  spec.seed = seed;
  return harness::Generate(spec);
}

std::vector<double> RandomPoint(Rng& rng, int n) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.Uniform();
  return x;
}

TEST(ExtensionValueTest, SingleEdgeAtHalf) {
  auto edge = testing::SingleEdge();
  std::vector<double> x = {0.5, 0.5};
  EXPECT_DOUBLE_EQ(ExtensionEstimator::Exact().Value(*edge, x), 0.5);
}

TEST(ExtensionValueTest, IntegralPointsReproduceSetValues) {
  auto f = RandomFunction(3, 8, harness::GeneratorKind::kExplicitTable);
  MultilinearExtension ext(*f, ExtensionEstimator::Exact());
  for (uint32_t mask = 0; mask < 256; mask += 7) {
    std::vector<double> x(8);
    for (int i = 0; i < 8; ++i) x[i] = mask >> i & 1u;
    EXPECT_NEAR(ext.Value(x), f->Evaluate(testing::MaskToSet(8, mask)), 1e-12);
  }
  std::vector<double> zero(8, 0.0);
  EXPECT_NEAR(ext.Value(zero), f->Evaluate({}), 1e-12);
}

TEST(ExtensionValueTest, MatchesReferenceSum) {
  Rng rng(17);
  for (auto kind : {harness::GeneratorKind::kGnpCut,
                    harness::GeneratorKind::kCoverage,
                    harness::GeneratorKind::kExplicitTable}) {
    auto f = RandomFunction(rng.NextU64(), 7, kind);
    MultilinearExtension ext(*f, ExtensionEstimator::Exact());
    for (int t = 0; t < 5; ++t) {
      std::vector<double> x = RandomPoint(rng, 7);
      EXPECT_NEAR(ext.Value(x), testing::ReferenceExtension(*f, x), 1e-10);
    }
  }
}

TEST(ExtensionValueTest, RejectsPointsOutsideTheCube) {
  auto edge = testing::SingleEdge();
  MultilinearExtension ext(*edge, ExtensionEstimator::Exact());
  std::vector<double> bad = {1.5, 0.0};
  EXPECT_THROW(ext.Value(bad), InvalidInputError);
  std::vector<double> short_x = {0.5};
  EXPECT_THROW(ext.Value(short_x), InvalidInputError);
}

TEST(ExtensionValueTest, ExactBackendRefusesLargeGroundSets) {
  GraphCutFunction big(21, {{0, 1, 1.0}});
  std::vector<double> x(21, 0.5);
  EXPECT_THROW(ExtensionEstimator::Exact().Value(big, x), BackendLimitError);
}

TEST(ExtensionGradientTest, Examples) {
  auto edge = testing::SingleEdge();
  ExtensionEstimator exact = ExtensionEstimator::Exact();
  std::vector<double> half = {0.5, 0.5};
  std::vector<double> g = exact.Gradient(*edge, half);
  EXPECT_NEAR(g[0], 0.0, 1e-12);
  EXPECT_NEAR(g[1], 0.0, 1e-12);
  std::vector<double> zero = {0.0, 0.0};
  g = exact.Gradient(*edge, zero);
  EXPECT_NEAR(g[0], 1.0, 1e-12);
  EXPECT_NEAR(g[1], 1.0, 1e-12);
}

TEST(ExtensionGradientTest, ModularGradientIsTheWeightVector) {
  std::vector<double> w = {0.3, 1.2, 2.0, 0.7};
  auto f = MakeModular(w);
  Rng rng(8);
  std::vector<double> x = RandomPoint(rng, 4);
  std::vector<double> exact = ExtensionEstimator::Exact().Gradient(*f, x);
  // Common random subsets make the sampled difference exact as well.
  std::vector<double> sampled =
      ExtensionEstimator::MonteCarlo(500, 4).Gradient(*f, x);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(exact[i], w[i], 1e-12);
    EXPECT_NEAR(sampled[i], w[i], 1e-12);
  }
}

TEST(ExtensionGradientTest, MatchesCenteredFiniteDifference) {
  Rng rng(23);
  const double h = 1e-4;
  for (int t = 0; t < 10; ++t) {
    auto f = RandomFunction(rng.NextU64(), 6,
                            t % 2 ? harness::GeneratorKind::kGnpCut
                                  : harness::GeneratorKind::kExplicitTable);
    MultilinearExtension ext(*f, ExtensionEstimator::Exact());
    std::vector<double> x(6);
    for (double& v : x) v = rng.UniformIn(0.1, 0.9);
    std::vector<double> grad = ext.Gradient(x);
    for (int j = 0; j < 6; ++j) {
      std::vector<double> up = x, down = x;
      up[j] += h;
      down[j] -= h;
      double fd = (ext.Value(up) - ext.Value(down)) / (2 * h);
      EXPECT_NEAR(grad[j], fd, 1e-6);
    }
  }
}

TEST(ExtensionGradientTest, PartialsDoNotIncreaseAlongOtherCoordinates) {
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    auto f = RandomFunction(rng.NextU64(), 6,
                            t % 3 == 0   ? harness::GeneratorKind::kGnpCut
                            : t % 3 == 1 ? harness::GeneratorKind::kCoverage
                                         : harness::GeneratorKind::kExplicitTable);
    MultilinearExtension ext(*f, ExtensionEstimator::Exact());
    std::vector<double> x = RandomPoint(rng, 6);
    std::vector<double> g = ext.Gradient(x);
    for (int k = 0; k < 6; ++k) {
      std::vector<double> y = x;
      y[k] = std::min(1.0, y[k] + rng.Uniform() * (1.0 - y[k]));
      std::vector<double> gy = ext.Gradient(y);
      for (int j = 0; j < 6; ++j) {
        if (j == k) continue;
        EXPECT_GE(g[j], gy[j] - 1e-9);
      }
    }
  }
}

TEST(MonteCarloTest, IsDeterministicGivenSeed) {
  auto f = RandomFunction(2, 10, harness::GeneratorKind::kGnpCut);
  std::vector<double> x(10, 0.3);
  ExtensionEstimator a = ExtensionEstimator::MonteCarlo(1000, 77);
  ExtensionEstimator b = ExtensionEstimator::MonteCarlo(1000, 77);
  EXPECT_EQ(a.Value(*f, x), b.Value(*f, x));
  EXPECT_EQ(a.Gradient(*f, x), b.Gradient(*f, x));
  EXPECT_NE(a.Value(*f, x), ExtensionEstimator::MonteCarlo(1000, 78).Value(*f, x));
}

TEST(MonteCarloTest, ConvergesWithinFourStandardErrors) {
  Rng rng(31);
  int within = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    int n = 4 + static_cast<int>(rng.Below(9));
    auto f = RandomFunction(rng.NextU64(), n,
                            t % 2 ? harness::GeneratorKind::kGnpCut
                                  : harness::GeneratorKind::kCoverage);
    std::vector<double> x = RandomPoint(rng, n);
    double exact = ExtensionEstimator::Exact().Value(*f, x);
    Estimate est =
        ExtensionEstimator::MonteCarlo(2000, rng.NextU64()).ValueWithError(*f, x);
    if (std::abs(est.mean - exact) <= 4 * est.std_error + 1e-12) ++within;
  }
  EXPECT_GE(within, 0.99 * trials);
}

TEST(MonteCarloTest, DefaultSampleCount) {
  EXPECT_EQ(ExtensionEstimator::DefaultSampleCount(10), 400000);
  EXPECT_EQ(ExtensionEstimator::DefaultSampleCount(1, 0.5), 40);
  EXPECT_TRUE(ExtensionEstimator::Auto(20, 1).exact());
  EXPECT_FALSE(ExtensionEstimator::Auto(21, 1).exact());
}

TEST(MonteCarloTest, SubstreamsAreDecorrelated) {
  ExtensionEstimator base = ExtensionEstimator::MonteCarlo(100, 5);
  EXPECT_NE(base.Substream(1).seed(), base.Substream(2).seed());
  EXPECT_EQ(base.Substream("a").seed(), base.Substream("a").seed());
}

}  // namespace
}  // namespace submod
