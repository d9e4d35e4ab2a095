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

#include "submod/box_search.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "submod/harness/brute_force.h"
#include "submod/harness/instances.h"
#include "submod/random.h"
#include "test_util.h"

namespace submod {
namespace {

TEST(BoxSearchTest, EmptyBoxGivesOrigin) {
  auto edge = testing::SingleEdge();
  MultilinearExtension ext(*edge, ExtensionEstimator::Exact());
  BoxSearchResult r = MaximizeOverBox(ext, std::vector<double>{0, 0}, {});
  EXPECT_EQ(r.point, (std::vector<double>{0, 0}));
  EXPECT_DOUBLE_EQ(r.value, 0.0);
}

TEST(BoxSearchTest, ModularGoesToTheTopGridCorner) {
  auto f = MakeModular({1.0, 0.0, 2.0, 0.5});
  MultilinearExtension ext(*f, ExtensionEstimator::Exact());
  std::vector<double> u = {0.9, 0.7, 0.33, 1.0};
  BoxSearchResult r = MaximizeOverBox(ext, u, {});
  const double delta = 1.0 / 16.0;
  EXPECT_DOUBLE_EQ(r.granularity, delta);
  for (int i : {0, 2, 3}) {
    EXPECT_NEAR(r.point[i], std::floor(u[i] / delta) * delta, 1e-12) << i;
  }
}

TEST(BoxSearchTest, SingleEdgeFullBox) {
  auto edge = testing::SingleEdge();
  MultilinearExtension ext(*edge, ExtensionEstimator::Exact());
  BoxSearchResult r = MaximizeOverBox(ext, std::vector<double>{1, 1}, {});
  EXPECT_GE(r.value, 1.0 / 3.0);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(BoxSearchTest, GranularityAndErrorBound) {
  auto f = MakeModular({1.0, 3.0, 2.0});
  MultilinearExtension ext(*f, ExtensionEstimator::Exact());
  BoxSearchConfig fine;
  fine.fine_grid = true;
  EXPECT_DOUBLE_EQ(BoxGranularity(3, fine), 1.0 / (8.0 * 81));
  EXPECT_DOUBLE_EQ(BoxGranularity(3, {}), 1.0 / 12.0);
  BoxSearchResult r = MaximizeOverBox(ext, std::vector<double>{0.5, 0.5, 0.5}, {});
  EXPECT_DOUBLE_EQ(r.f_max, 3.0);
  EXPECT_DOUBLE_EQ(r.grid_error_bound, 3 * (1.0 / 12.0) * 3.0);
  EXPECT_EQ(r.copies, (std::vector<int>{6, 6, 6}));
}

TEST(ReplicatedFunctionTest, ClosedFormMatchesReference) {
  auto edge = testing::SingleEdge();
  MultilinearExtension ext(*edge, ExtensionEstimator::Exact());
  ReplicatedFunction g(ext, {2, 1}, 0.25);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.SymmetryClass(1), 0);
  EXPECT_EQ(g.SymmetryClass(2), 1);
  Membership both = ToMembership(3, {0, 2});
  EXPECT_EQ(g.PointOf(both), (std::vector<double>{0.25, 0.25}));
  std::vector<double> z = {0.3, 0.9, 0.4};
  EXPECT_NEAR(*g.ClosedFormExtension(z), testing::ReferenceExtension(g, z),
              1e-12);
}

TEST(BoxSearchTest, WithinInnerRatioOfBestGridPoint) {
  Rng rng(97);
  BoxSearchConfig cfg;
  for (int t = 0; t < 30; ++t) {
    harness::InstanceSpec spec;
    spec.generator = t % 2 ? harness::GeneratorKind::kGnpCut
                           : harness::GeneratorKind::kExplicitTable;
    spec.n = 3 + t % 5;
    spec.seed = rng.NextU64();
    auto f = harness::Generate(spec);
    const int n = f->size();
    MultilinearExtension ext(*f, ExtensionEstimator::Exact());
    std::vector<double> u(n);
    for (double& v : u) v = rng.Uniform();
    BoxSearchResult r = MaximizeOverBox(ext, u, cfg);
    std::vector<double> top(n);
    for (int i = 0; i < n; ++i) {
      ASSERT_LE(r.point[i], u[i] + 1e-12);
      top[i] = r.copies[i] * r.granularity;
    }
    double grid_opt = harness::MaxOverBox(*f, top).value;
    EXPECT_GE(3.0 * r.value + r.f_max / (4.0 * n * n) + 1e-2 * grid_opt,
              grid_opt);
    // The whole box is within the grid error bound of the grid box.
    EXPECT_GE(harness::MaxOverBox(*f, top).value + r.grid_error_bound + 1e-12,
              harness::MaxOverBox(*f, u).value);
  }
}

}  // namespace
}  // namespace submod
