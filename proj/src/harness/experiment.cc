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

#include "submod/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>
#include <tuple>

#include "submod/error.h"
#include "submod/extension.h"
#include "submod/harness/brute_force.h"
#include "submod/knapsack_solver.h"
#include "submod/packing_solver.h"
#include "submod/polytope.h"
#include "submod/random.h"

namespace submod::harness {
namespace {

using nlohmann::json;

constexpr double kGridResolution = 0.05;

std::string SmoothingName(SmoothingMode mode) {
  return mode == SmoothingMode::kSmoothed ? "smoothed" : "provable";
}

SmoothingMode ParseSmoothing(const std::string& name) {
  if (name == "provable" || name == "none") return SmoothingMode::kNone;
  if (name == "smoothed") return SmoothingMode::kSmoothed;
  throw InvalidInputError("unknown beta_mode '" + name +
                          "' (expected provable or smoothed)");
}

LocalSearchConfig LocalSearchFrom(const SolverConfig& c) {
  LocalSearchConfig ls;
  ls.epsilon = c.local_search_epsilon;
  ls.seed = DeriveSeed(c.seed, TagHash("local-search"));
  ls.smoothing = c.beta_mode;
  return ls;
}

PackingConfig PackingFrom(const SolverConfig& c) {
  PackingConfig p;
  p.steps = c.steps;
  p.box.granularity = c.grid;
  p.box.local_search = LocalSearchFrom(c);
  return p;
}

ExtensionEstimator EstimatorFrom(const SolverConfig& c, int n) {
  uint64_t seed = DeriveSeed(c.seed, TagHash("extension"));
  if (c.samples > 0) return ExtensionEstimator::MonteCarlo(c.samples, seed);
  return ExtensionEstimator::Auto(n, seed);
}

KnapsackAlgoConfig KnapsackFrom(const SolverConfig& c, int k) {
  KnapsackAlgoConfig a;
  a.epsilon =
      c.epsilon > 0 ? c.epsilon : std::min(0.05, 1.0 / (4.0 * k * k + 1.0));
  a.enum_cap = c.enum_cap;
  a.seed = c.seed;
  a.samples = c.samples;
  a.fractional.grid = c.grid;
  a.fractional.epsilon = c.local_search_epsilon;
  a.packing = PackingFrom(c);
  return a;
}

PackingPolytope PolytopeOf(const Constraint& constraint, int n) {
  std::vector<PackingPolytope> parts = {PackingPolytope::Box(n)};
  if (constraint.cardinality) {
    parts.push_back(
        PackingPolytope::OfMatroid(Matroid::Uniform(n, *constraint.cardinality)));
  }
  if (constraint.matroid) {
    parts.push_back(PackingPolytope::OfMatroid(*constraint.matroid));
  }
  if (constraint.knapsacks) {
    parts.push_back(PackingPolytope::OfKnapsacks(*constraint.knapsacks));
  }
  return PackingPolytope::Intersection(parts);
}

json KnapsackDetails(const KnapsackSolveReport& r) {
  return json{{"seed_sets", r.seed_sets},
              {"fractional_solves", r.fractional_solves},
              {"roundings", r.roundings},
              {"rounding_rejections", r.rounding_rejections},
              {"from_rounding", r.from_rounding},
              {"dropped", r.dropped},
              {"warnings", r.warnings}};
}

// Minimal CSV quoting: fields containing a comma or quote are quoted.
std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kExactCardinality:
      return "exact-card";
    case Algorithm::kKnapsacks:
      return "knapsacks";
    case Algorithm::kPacking:
      return "packing";
    case Algorithm::kMatroidKnapsacks:
      return "matroid-knapsacks";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kExactCardinality, Algorithm::kKnapsacks,
                      Algorithm::kPacking, Algorithm::kMatroidKnapsacks}) {
    if (ToString(a) == name) return a;
  }
  throw InvalidInputError("unknown algorithm '" + name + "'");
}

SolverConfig SolverConfigFromJson(const json& j) {
  if (!j.is_object()) throw InvalidInputError("solver config must be an object");
  SolverConfig c;
  try {
    if (j.contains("algorithm")) {
      c.algorithm = ParseAlgorithm(j.at("algorithm").get<std::string>());
    }
    c.steps = j.value("steps", c.steps);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.enum_cap = j.value("enum_cap", c.enum_cap);
    if (j.contains("beta_mode")) {
      c.beta_mode = ParseSmoothing(j.at("beta_mode").get<std::string>());
    }
    c.grid = j.value("grid", c.grid);
    c.seed = j.value("seed", c.seed);
    c.samples = j.value("samples", c.samples);
    c.local_search_epsilon =
        j.value("local_search_epsilon", c.local_search_epsilon);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("bad solver config: ") + e.what());
  }
  if (c.steps < 0 || c.epsilon < 0 || c.grid < 0 || c.grid > 1 ||
      c.samples < 0 || c.local_search_epsilon <= 0 ||
      c.local_search_epsilon >= 1) {
    throw InvalidInputError("solver config value out of range");
  }
  return c;
}

json SolverConfigToJson(const SolverConfig& c) {
  return json{{"algorithm", ToString(c.algorithm)},
              {"steps", c.steps},
              {"epsilon", c.epsilon},
              {"enum_cap", c.enum_cap},
              {"beta_mode", SmoothingName(c.beta_mode)},
              {"grid", c.grid},
              {"seed", c.seed},
              {"samples", c.samples},
              {"local_search_epsilon", c.local_search_epsilon}};
}

SolveOutcome Solve(const SetFunction& f, const Constraint& constraint,
                   const SolverConfig& config) {
  const int n = f.size();
  SolveOutcome out;
  switch (config.algorithm) {
    case Algorithm::kExactCardinality: {
      if (!constraint.cardinality) {
        throw InvalidInputError("exact-card needs a cardinality constraint");
      }
      CardinalitySolveReport r =
          SolveExactCardinality(f, *constraint.cardinality,
                                LocalSearchFrom(config));
      out.set = r.winner;
      out.value = r.winner_value;
      out.guarantee = 0.25;
      out.regime = "proven";
      out.details = json{{"first", r.first},
                         {"second", r.second},
                         {"first_value", r.first_value},
                         {"second_value", r.second_value},
                         {"iterations", r.first_iterations + r.second_iterations},
                         {"complemented", r.complemented}};
      break;
    }
    case Algorithm::kKnapsacks: {
      if (!constraint.knapsacks || constraint.matroid ||
          constraint.cardinality) {
        throw InvalidInputError("knapsacks needs a pure knapsack constraint");
      }
      KnapsackSolveReport r = SolveKnapsacks(
          f, *constraint.knapsacks,
          KnapsackFrom(config, constraint.knapsacks->count()));
      out.set = r.set;
      out.value = r.value;
      out.guarantee = r.guarantee;
      out.regime = ToString(r.regime);
      out.details = KnapsackDetails(r);
      break;
    }
    case Algorithm::kMatroidKnapsacks: {
      if (!constraint.knapsacks || constraint.cardinality ||
          !constraint.matroid) {
        throw InvalidInputError(
            "matroid-knapsacks needs a matroid and knapsacks");
      }
      KnapsackSolveReport r = SolveMatroidAndKnapsacks(
          f, *constraint.matroid, *constraint.knapsacks,
          KnapsackFrom(config, constraint.knapsacks->count()));
      out.set = r.set;
      out.value = r.value;
      out.guarantee = r.guarantee;
      out.regime = ToString(r.regime);
      out.details = KnapsackDetails(r);
      break;
    }
    case Algorithm::kPacking: {
      ExtensionEstimator estimator = EstimatorFrom(config, n);
      PackingSolveReport r = SolvePacking(f, estimator, PolytopeOf(constraint, n),
                                          PackingFrom(config));
      out.point = r.point;
      out.value = r.value;
      out.guarantee = r.certified_factor;
      out.regime = config.beta_mode == SmoothingMode::kSmoothed ? "smoothed"
                                                                : "proven";
      json candidates = json::array();
      for (const PackingCandidate& c : r.candidates) {
        candidates.push_back(
            json{{"name", c.name}, {"value", c.value}, {"point", c.point}});
      }
      out.details = json{{"candidates", candidates},
                         {"winner", r.candidates[r.winner].name},
                         {"beta", r.beta},
                         {"steps", r.steps},
                         {"box_granularity", r.box.granularity},
                         {"backend", estimator.exact() ? "exact" : "monte-carlo"},
                         {"samples", estimator.samples()}};
      break;
    }
  }
  return out;
}

OptimumOutcome BruteForceOptimum(const SetFunction& f,
                                 const Constraint& constraint,
                                 Algorithm algorithm) {
  const int n = f.size();
  OptimumOutcome out;
  if (n > kMaxBruteForceElements) return out;
  BruteForceResult r;
  switch (algorithm) {
    case Algorithm::kExactCardinality:
      if (!constraint.cardinality) return out;
      r = BruteForceCardinality(f, *constraint.cardinality);
      break;
    case Algorithm::kKnapsacks:
      if (!constraint.knapsacks) return out;
      r = BruteForceKnapsacks(f, *constraint.knapsacks);
      break;
    case Algorithm::kMatroidKnapsacks:
      if (!constraint.matroid) return out;
      r = BruteForceMatroid(f, *constraint.matroid, constraint.knapsacks);
      break;
    case Algorithm::kPacking: {
      if (constraint.knapsacks) {
        if (GridPointCount(n, kGridResolution) > kMaxGridPoints) return out;
        r = BruteForcePackingGrid(f, PolytopeOf(constraint, n), kGridResolution);
      } else {
        Matroid m = constraint.matroid ? *constraint.matroid
                    : constraint.cardinality
                        ? Matroid::Uniform(n, *constraint.cardinality)
                        : Matroid::Free(n);
        r = BruteForceMatroidPolytopeGrid(f, m, kGridResolution);
      }
      break;
    }
  }
  out.available = true;
  out.value = r.value;
  out.method = r.method;
  return out;
}

ExperimentReport RunExperiment(std::span<const ExperimentCell> cells,
                               const ExperimentOptions& options) {
  ExperimentReport report;
  std::vector<ReportRow> rows(cells.size());
  const double slack = options.hard ? 0.0 : options.slack;

  auto run_cell = [&](size_t i) {
    const ExperimentCell& cell = cells[i];
    ReportRow& row = rows[i];
    row.instance_id = cell.instance_id;
    row.algorithm = ToString(cell.solver.algorithm);
    row.generator = ToString(cell.instance.generator);
    row.n = cell.instance.n;
    row.seed = cell.solver.seed;
    auto start = std::chrono::steady_clock::now();
    try {
      std::unique_ptr<SetFunction> f = Generate(cell.instance);
      Constraint constraint = GenerateConstraint(f->size(), cell.constraint);
      SolveOutcome solved = Solve(*f, constraint, cell.solver);
      row.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      row.value = solved.value;
      row.guarantee = solved.guarantee;
      row.threshold = solved.guarantee * (1.0 - slack);
      row.regime = solved.regime;
      // Heuristic enumeration carries no proven constant.
      row.enforced = solved.regime != "heuristic-enumeration";
      OptimumOutcome opt = BruteForceOptimum(*f, constraint,
                                             cell.solver.algorithm);
      row.has_opt = opt.available;
      if (opt.available) {
        row.opt = opt.value;
        row.ratio = opt.value > 0 ? solved.value / opt.value : 1.0;
        if (row.enforced) {
          row.passed = solved.value >= row.threshold * opt.value - 1e-12;
        }
      }
    } catch (const std::exception& e) {
      row.error = e.what();
      row.passed = false;
      row.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
  };

  const int workers =
      std::max(1, std::min<int>(options.workers, static_cast<int>(cells.size())));
  if (workers <= 1) {
    for (size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next++; i < cells.size(); i = next++) run_cell(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return std::tie(a.instance_id, a.algorithm) <
                            std::tie(b.instance_id, b.algorithm);
                   });
  int with_ratio = 0;
  double total = 0.0;
  report.min_ratio = std::numeric_limits<double>::infinity();
  for (const ReportRow& row : rows) {
    if (!row.error.empty()) {
      ++report.failures;
      continue;
    }
    if (!row.passed) ++report.violations;
    if (row.has_opt) {
      ++with_ratio;
      total += row.ratio;
      report.min_ratio = std::min(report.min_ratio, row.ratio);
    }
  }
  if (with_ratio == 0) report.min_ratio = 0.0;
  report.mean_ratio = with_ratio > 0 ? total / with_ratio : 0.0;
  report.rows = std::move(rows);
  return report;
}

std::vector<ExperimentCell> DefaultBattery(uint64_t master_seed) {
  std::vector<ExperimentCell> cells;
  auto add = [&](const std::string& id, InstanceSpec inst, ConstraintSpec cons,
                 Algorithm algorithm) {
    ExperimentCell cell;
    cell.instance_id = id;
    inst.seed = DeriveSeed(master_seed, TagHash(id + "/instance"));
    cons.seed = DeriveSeed(master_seed, TagHash(id + "/constraint"));
    cell.instance = inst;
    cell.constraint = cons;
    cell.solver.algorithm = algorithm;
    cell.solver.seed = DeriveSeed(master_seed, TagHash(id + "/solver"));
    cells.push_back(cell);
  };
  const GeneratorKind kinds[] = {GeneratorKind::kGnpCut,
                                 GeneratorKind::kExplicitTable,
                                 GeneratorKind::kCoverage};
  for (int n : {8, 10, 12, 14}) {
    char prefix[16];
    std::snprintf(prefix, sizeof(prefix), "n%02d", n);
    for (int v = 0; v < 3; ++v) {
      InstanceSpec inst;
      inst.generator = kinds[v];
      inst.n = n;
      const std::string tail =
          std::string(prefix) + "-" + ToString(kinds[v]);

      // Cardinality below, at and above n/2.
      ConstraintSpec card;
      card.kind = ConstraintSpec::Kind::kCardinality;
      card.cardinality = v == 0 ? n / 4 : v == 1 ? (3 * n) / 4 : n / 2;
      add("exact-card-" + tail, inst, card, Algorithm::kExactCardinality);

      ConstraintSpec knap;
      knap.kind = ConstraintSpec::Kind::kKnapsacks;
      knap.knapsacks = v == 2 ? 2 : 1;
      add("knapsacks-" + tail, inst, knap, Algorithm::kKnapsacks);

      ConstraintSpec poly;
      poly.kind = v == 1 ? ConstraintSpec::Kind::kPartitionMatroid
                         : ConstraintSpec::Kind::kUniformMatroid;
      poly.cardinality = std::max(1, n / 3);
      poly.blocks = 2;
      add("packing-" + tail, inst, poly, Algorithm::kPacking);
    }
  }
  return cells;
}

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void WriteReportCsv(const ExperimentReport& report, std::ostream& out) {
  out << "instance_id,algorithm,generator,n,value,opt,ratio,guarantee,"
         "threshold,regime,enforced,passed,seed,error\n";
  for (const ReportRow& r : report.rows) {
    out << CsvField(r.instance_id) << ',' << r.algorithm << ',' << r.generator
        << ',' << r.n << ',' << FormatNumber(r.value) << ','
        << (r.has_opt ? FormatNumber(r.opt) : "") << ','
        << (r.has_opt ? FormatNumber(r.ratio) : "") << ','
        << FormatNumber(r.guarantee) << ',' << FormatNumber(r.threshold) << ','
        << r.regime << ',' << (r.enforced ? 1 : 0) << ','
        << (r.passed ? 1 : 0) << ',' << r.seed << ',' << CsvField(r.error)
        << '\n';
  }
}

void WriteTimingCsv(const ExperimentReport& report, std::ostream& out) {
  out << "instance_id,algorithm,runtime_ms\n";
  for (const ReportRow& r : report.rows) {
    out << CsvField(r.instance_id) << ',' << r.algorithm << ','
        << FormatNumber(r.runtime_ms) << '\n';
  }
}

json ReportToJson(const ExperimentReport& report,
                  std::span<const ExperimentCell> cells) {
  json jcells = json::array();
  for (const ExperimentCell& c : cells) {
    jcells.push_back(json{
        {"instance_id", c.instance_id},
        {"instance", InstanceSpecToJson(c.instance)},
        {"constraint", ConstraintSpecToJson(c.constraint)},
        {"solver", SolverConfigToJson(c.solver)}});
  }
  return json{{"cells", jcells},
              {"summary",
               {{"rows", report.rows.size()},
                {"min_ratio", report.min_ratio},
                {"mean_ratio", report.mean_ratio},
                {"violations", report.violations},
                {"failures", report.failures}}}};
}

int WorkerCountFromEnv() {
  const char* value = std::getenv("SUBMOD_WORKERS");
  if (value == nullptr) return 1;
  int workers = std::atoi(value);
  return workers >= 1 ? workers : 1;
}

}  // namespace submod::harness
