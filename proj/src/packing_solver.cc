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

#include "submod/packing_solver.h"

#include <cmath>
#include <numbers>

#include "submod/error.h"
#include "submod/random.h"

namespace submod {

double CertifiedPackingFactor(double beta) {
  constexpr double e = std::numbers::e;
  return beta * (e - 1.0) / ((4.0 * e - 2.0) * beta + (e - 1.0));
}

PackingSolveReport SolvePacking(const MultilinearExtension& extension,
                                const PackingPolytope& polytope,
                                const PackingConfig& config) {
  const int n = extension.size();
  if (polytope.size() != n) {
    throw InvalidInputError("polytope dimension differs from the function");
  }
  PackingSolveReport report;
  report.steps = config.steps > 0 ? config.steps : DefaultGreedySteps(n);
  report.beta = InnerRatio(config.box.local_search.smoothing);
  report.certified_factor = CertifiedPackingFactor(report.beta);

  report.first_run = ContinuousGreedy(extension, polytope, report.steps);
  const std::vector<double>& y1 = report.first_run.final_point;
  report.box = MaximizeOverBox(extension, y1, config.box);

  std::vector<double> residual(n);
  for (int i = 0; i < n; ++i) residual[i] = std::clamp(1.0 - y1[i], 0.0, 1.0);
  report.second_run =
      ContinuousGreedy(extension, polytope.RestrictUpper(residual), report.steps);

  const uint64_t stream = TagHash("packing-candidates");
  auto candidate = [&](const char* name, const std::vector<double>& point) {
    return PackingCandidate{name, point, extension.Value(point, stream)};
  };
  report.candidates = {
      candidate("greedy", y1),
      candidate("residual-greedy", report.second_run.final_point),
      candidate("box-search", report.box.point),
      candidate("greedy-difference", report.first_run.dmax_point),
      candidate("residual-difference", report.second_run.dmax_point),
  };
  report.winner = 0;
  for (int c = 1; c < 5; ++c) {
    if (report.candidates[c].value > report.candidates[report.winner].value) {
      report.winner = c;
    }
  }
  report.point = report.candidates[report.winner].point;
  report.value = report.candidates[report.winner].value;
  return report;
}

PackingSolveReport SolvePacking(const SetFunction& f,
                                const ExtensionEstimator& estimator,
                                const PackingPolytope& polytope,
                                const PackingConfig& config) {
  const MultilinearExtension extension(f, estimator);
  return SolvePacking(extension, polytope, config);
}

}  // namespace submod
