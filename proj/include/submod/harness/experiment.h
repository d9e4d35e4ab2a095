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

#ifndef SUBMOD_HARNESS_EXPERIMENT_H_
#define SUBMOD_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "submod/harness/instances.h"
#include "submod/local_search.h"
#include "submod/set_function.h"

namespace submod::harness {

enum class Algorithm { kExactCardinality, kKnapsacks, kPacking, kMatroidKnapsacks };

std::string ToString(Algorithm algorithm);
Algorithm ParseAlgorithm(const std::string& name);

// Solver configuration file:
//   {algorithm, steps, epsilon, enum_cap, beta_mode, grid, seed, samples}.
struct SolverConfig {
  Algorithm algorithm = Algorithm::kExactCardinality;
  int steps = 0;          // continuous greedy steps; zero selects n^2
  // Knapsack epsilon; zero selects min(0.05, 1/(4k^2 + 1)).
  double epsilon = 0.0;
  int enum_cap = 2;
  SmoothingMode beta_mode = SmoothingMode::kNone;  // "provable" | "smoothed"
  double grid = 0.0;      // box / fractional grid step; zero selects 1/(4n)
  uint64_t seed = 0;
  int64_t samples = 0;    // zero selects exact evaluation when n <= 20
  double local_search_epsilon = 1e-3;
};

SolverConfig SolverConfigFromJson(const nlohmann::json& j);
nlohmann::json SolverConfigToJson(const SolverConfig& c);

struct SolveOutcome {
  ElementSet set;
  std::vector<double> point;  // packing only
  double value = 0.0;
  double guarantee = 0.0;
  std::string regime;  // "proven" | "full" | "heuristic-enumeration"
  nlohmann::json details;
};

// Dispatches to the solver for `config.algorithm`. The packing algorithm
// maximizes F over the polytope of the constraint's matroid and knapsacks.
SolveOutcome Solve(const SetFunction& f, const Constraint& constraint,
                   const SolverConfig& config);

struct OptimumOutcome {
  bool available = false;
  double value = 0.0;
  std::string method;
};

// Brute-force optimum for the algorithm's feasible family, when within
// the brute-force limits.
OptimumOutcome BruteForceOptimum(const SetFunction& f,
                                 const Constraint& constraint,
                                 Algorithm algorithm);

struct ExperimentCell {
  std::string instance_id;
  InstanceSpec instance;
  ConstraintSpec constraint;
  SolverConfig solver;
};

struct ReportRow {
  std::string instance_id;
  std::string algorithm;
  std::string generator;
  int n = 0;
  double value = 0.0;
  bool has_opt = false;
  double opt = 0.0;
  double ratio = 0.0;
  double guarantee = 0.0;
  double threshold = 0.0;
  std::string regime;
  // Whether falling below the threshold counts as a violation.
  bool enforced = false;
  bool passed = true;
  uint64_t seed = 0;
  double runtime_ms = 0.0;
  std::string error;
};

struct ExperimentOptions {
  // Thresholds are guarantee * (1 - slack); hard mode uses zero slack.
  double slack = 1e-2;
  bool hard = false;
  int workers = 1;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  double min_ratio = 0.0;
  double mean_ratio = 0.0;
  int violations = 0;
  int failures = 0;  // cells that threw
};

// Runs every cell (in a worker pool), compares with brute force where
// possible and assembles rows ordered by (instance id, algorithm). Cell
// errors are recorded in the row and the batch continues.
ExperimentReport RunExperiment(std::span<const ExperimentCell> cells,
                               const ExperimentOptions& options);

// Exact cardinality, knapsacks and packing at n in {8, 10, 12, 14}.
std::vector<ExperimentCell> DefaultBattery(uint64_t master_seed);

// Deterministic CSV (no timing column).
void WriteReportCsv(const ExperimentReport& report, std::ostream& out);
// instance_id,algorithm,runtime_ms
void WriteTimingCsv(const ExperimentReport& report, std::ostream& out);
nlohmann::json ReportToJson(const ExperimentReport& report,
                            std::span<const ExperimentCell> cells);

// SUBMOD_WORKERS, default 1.
int WorkerCountFromEnv();

// Fixed-format number rendering used by every report writer.
std::string FormatNumber(double v);

}  // namespace submod::harness

#endif  // SUBMOD_HARNESS_EXPERIMENT_H_
