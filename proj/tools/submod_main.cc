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

// Command-line front end: generate, solve, verify and bench.
//
// Exit codes: 0 when every assertion passed, 2 on a guarantee violation,
// 1 on any error. SUBMOD_WORKERS sets the bench worker count.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "submod/error.h"
#include "submod/harness/experiment.h"
#include "submod/harness/instances.h"
#include "submod/harness/properties.h"

namespace {

using nlohmann::json;
using namespace submod::harness;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw submod::InvalidInputError("cannot write " + path);
  out << text;
}

// --spec accepts one {instance, constraint, id?} object or
// {"instances": [...]} with several.
int RunGenerate(const std::string& spec_path, const std::string& out_dir) {
  json spec = ReadJsonFile(spec_path);
  json entries = spec.contains("instances") ? spec.at("instances")
                                            : json::array({spec});
  std::filesystem::create_directories(out_dir);
  int index = 0;
  for (const json& entry : entries) {
    std::string id = entry.value("id", "instance-" + std::to_string(index));
    InstanceSpec inst = InstanceSpecFromJson(entry.value("instance", json::object()));
    std::unique_ptr<submod::SetFunction> f = Generate(inst);
    const std::string base = (std::filesystem::path(out_dir) / id).string();
    WriteJsonFile(base + ".instance.json", InstanceToJson(*f));
    if (entry.contains("constraint")) {
      ConstraintSpec cons = ConstraintSpecFromJson(entry.at("constraint"));
      WriteJsonFile(base + ".constraint.json",
                    ConstraintToJson(GenerateConstraint(f->size(), cons)));
    }
    std::cout << base << ".instance.json\n";
    ++index;
  }
  return kExitOk;
}

int RunSolve(const std::string& instance_path,
             const std::string& constraint_path, const std::string& algorithm,
             const std::string& config_path, const std::string& out_path,
             bool check, double slack) {
  std::unique_ptr<submod::SetFunction> f =
      InstanceFromJson(ReadJsonFile(instance_path));
  Constraint constraint;
  if (!constraint_path.empty()) {
    constraint = ConstraintFromJson(ReadJsonFile(constraint_path), f->size());
  }
  SolverConfig config;
  if (!config_path.empty()) {
    config = SolverConfigFromJson(ReadJsonFile(config_path));
  }
  if (!algorithm.empty()) config.algorithm = ParseAlgorithm(algorithm);

  auto start = std::chrono::steady_clock::now();
  SolveOutcome solved = Solve(*f, constraint, config);
  double wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  json report = {{"algorithm", ToString(config.algorithm)},
                 {"n", f->size()},
                 {"value", solved.value},
                 {"guarantee", solved.guarantee},
                 {"regime", solved.regime},
                 {"seed", config.seed},
                 {"config", SolverConfigToJson(config)},
                 {"wall_time_ms", wall_ms},
                 {"details", solved.details}};
  if (config.algorithm == Algorithm::kPacking) {
    report["point"] = solved.point;
  } else {
    report["set"] = solved.set;
  }
  int code = kExitOk;
  if (check) {
    OptimumOutcome opt = BruteForceOptimum(*f, constraint, config.algorithm);
    if (opt.available) {
      double threshold = solved.guarantee * (1.0 - slack);
      bool passed = solved.regime == "heuristic-enumeration" ||
                    solved.value >= threshold * opt.value - 1e-12;
      report["opt"] = opt.value;
      report["opt_method"] = opt.method;
      report["threshold"] = threshold;
      report["passed"] = passed;
      if (!passed) code = kExitViolation;
    }
  }
  WriteOutput(out_path, report.dump(2) + "\n");
  return code;
}

int RunVerify(const std::string& suite, int64_t trials, uint64_t seed) {
  SuiteResult r = VerifyProperties(suite, trials, seed);
  for (const std::string& note : r.notes) std::cerr << note << "\n";
  std::cout << "suite=" << r.name << " trials=" << r.trials
            << " checks=" << r.checks << " violations=" << r.violations
            << " worst_margin=" << FormatNumber(r.worst_margin)
            << (r.vacuous ? " vacuous" : "")
            << (r.passed ? " PASS" : " FAIL") << "\n";
  return r.passed ? kExitOk : kExitViolation;
}

int RunBench(const std::string& battery, const std::string& out_path,
             uint64_t seed, double slack, bool hard) {
  if (battery != "default") {
    throw submod::InvalidInputError("unknown battery '" + battery + "'");
  }
  std::vector<ExperimentCell> cells = DefaultBattery(seed);
  ExperimentOptions options;
  options.slack = slack;
  options.hard = hard;
  options.workers = WorkerCountFromEnv();
  ExperimentReport report = RunExperiment(cells, options);

  std::ostringstream csv, timing;
  WriteReportCsv(report, csv);
  WriteTimingCsv(report, timing);
  WriteOutput(out_path, csv.str());
  if (!out_path.empty() && out_path != "-") {
    WriteOutput(out_path + ".timing.csv", timing.str());
    WriteJsonFile(out_path + ".json", ReportToJson(report, cells));
  }
  std::cerr << "rows=" << report.rows.size()
            << " min_ratio=" << FormatNumber(report.min_ratio)
            << " mean_ratio=" << FormatNumber(report.mean_ratio)
            << " violations=" << report.violations
            << " failures=" << report.failures << "\n";
  if (report.failures > 0) return kExitError;
  return report.violations > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization solvers and test harness"};
  app.require_subcommand(1);

  std::string spec_path, out_dir;
  CLI::App* generate = app.add_subcommand("generate", "Generate instances");
  generate->add_option("--spec", spec_path, "Generator spec (JSON)")->required();
  generate->add_option("--out", out_dir, "Output directory")->required();

  std::string instance_path, constraint_path, algorithm, config_path,
      report_path;
  bool check = false;
  double solve_slack = 1e-2;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("--instance", instance_path, "Instance file")->required();
  solve->add_option("--constraint", constraint_path, "Constraint file");
  solve->add_option("--algorithm", algorithm,
                    "exact-card | knapsacks | packing | matroid-knapsacks");
  solve->add_option("--config", config_path, "Solver config (JSON)");
  solve->add_option("--out", report_path, "Report file (default stdout)");
  solve->add_flag("--check", check, "Compare against brute force");
  solve->add_option("--slack", solve_slack, "Relative threshold slack");

  std::string suite;
  int64_t trials = 1000;
  uint64_t verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--trials", trials, "Trials");
  verify->add_option("--seed", verify_seed, "Seed");

  std::string battery = "default", csv_path;
  uint64_t bench_seed = 1;
  double slack = 1e-2;
  bool hard = false;
  CLI::App* bench = app.add_subcommand("bench", "Run an experiment battery");
  bench->add_option("--battery", battery, "Battery name");
  bench->add_option("--out", csv_path,
                    "CSV report; also writes <out>.json and <out>.timing.csv")
      ->required();
  bench->add_option("--seed", bench_seed, "Master seed");
  bench->add_option("--slack", slack, "Relative threshold slack");
  bench->add_flag("--hard", hard, "Zero-slack thresholds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*generate) return RunGenerate(spec_path, out_dir);
    if (*solve) {
      return RunSolve(instance_path, constraint_path, algorithm, config_path,
                      report_path, check, solve_slack);
    }
    if (*verify) return RunVerify(suite, trials, verify_seed);
    if (*bench) return RunBench(battery, csv_path, bench_seed, slack, hard);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
