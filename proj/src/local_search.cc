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

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "submod/error.h"
#include "submod/extension.h"
#include "submod/random.h"

namespace submod {
namespace {

// Strict multiplicative improvement, plus an absolute floor so that
// floating-point noise never counts as progress.
bool Improves(double candidate, double current, double relative) {
  const double gain = candidate - current;
  return gain > relative * std::abs(current) &&
         gain > 1e-12 * (1.0 + std::abs(current));
}

ElementSet CheckedGround(const SetFunction& f, const ElementSet& ground) {
  ElementSet g = Normalized(ground);
  for (int e : g) {
    if (e < 0 || e >= f.size()) {
      throw InvalidElementError("ground element " + std::to_string(e) +
                                " outside the function's ground set");
    }
  }
  return g;
}

// First element of each symmetry class among `ground` elements whose
// membership equals `member`.
std::vector<int> Representatives(const SetFunction& f, const ElementSet& ground,
                                 const Membership& in, bool member) {
  std::vector<int> reps;
  std::unordered_set<int> seen;
  for (int e : ground) {
    if (static_cast<bool>(in[e]) != member) continue;
    if (seen.insert(f.SymmetryClass(e)).second) reps.push_back(e);
  }
  return reps;
}

// Add/delete local search on `objective`, starting from `in`.
int64_t AddDeleteSearch(const SetFunction& f, const ElementSet& ground,
                        const std::function<double(const Membership&)>& objective,
                        Membership& in, double& value, double relative,
                        int64_t max_iters) {
  int64_t iterations = 0;
  while (iterations < max_iters) {
    int best_move = -1;
    double best_value = value;
    for (bool member : {false, true}) {
      for (int e : Representatives(f, ground, in, member)) {
        in[e] ^= 1;
        const double v = objective(in);
        in[e] ^= 1;
        if (v > best_value) {
          best_value = v;
          best_move = e;
        }
      }
    }
    if (best_move < 0 || !Improves(best_value, value, relative)) break;
    in[best_move] ^= 1;
    value = best_value;
    ++iterations;
  }
  return iterations;
}

}  // namespace

double InnerRatio(SmoothingMode mode) {
  return mode == SmoothingMode::kSmoothed ? 0.4 : 1.0 / 3.0;
}

LocalSearchOutcome LocalSearchCardinality(const SetFunction& f,
                                          const ElementSet& ground, int k,
                                          const LocalSearchConfig& config) {
  const ElementSet g = CheckedGround(f, ground);
  if (k < 0) throw PreconditionError("cardinality must be non-negative");
  if (k > static_cast<int>(g.size())) {
    throw InfeasibleError("k=" + std::to_string(k) + " exceeds ground size " +
                          std::to_string(g.size()));
  }
  if (!(config.epsilon > 0.0)) {
    throw PreconditionError("local search epsilon must be positive");
  }
  const double size = static_cast<double>(std::max<size_t>(g.size(), 1));
  const double relative = config.epsilon / std::pow(size, 4);

  Membership in(f.size(), 0);
  double value = f.ValueOf(in);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    double best_value = 0.0;
    for (int e : Representatives(f, g, in, false)) {
      in[e] = 1;
      const double v = f.ValueOf(in);
      in[e] = 0;
      if (best < 0 || v > best_value) {
        best = e;
        best_value = v;
      }
    }
    in[best] = 1;
    value = best_value;
  }

  LocalSearchOutcome out;
  while (out.iterations < config.max_iters) {
    int best_out = -1;
    int best_in = -1;
    double best_value = value;
    const std::vector<int> members = Representatives(f, g, in, true);
    const std::vector<int> others = Representatives(f, g, in, false);
    for (int x : members) {
      for (int y : others) {
        if (f.SymmetryClass(x) == f.SymmetryClass(y)) continue;
        in[x] = 0;
        in[y] = 1;
        const double v = f.ValueOf(in);
        in[x] = 1;
        in[y] = 0;
        if (v > best_value) {
          best_value = v;
          best_out = x;
          best_in = y;
        }
      }
    }
    if (best_out < 0 || !Improves(best_value, value, relative)) break;
    in[best_out] = 0;
    in[best_in] = 1;
    value = best_value;
    ++out.iterations;
  }
  out.set = FromMembership(in);
  out.value = value;
  return out;
}

LocalSearchOutcome SecondSet(const SetFunction& f, const ElementSet& forbidden,
                             int k, const LocalSearchConfig& config) {
  return LocalSearchCardinality(f, Complement(f.size(), forbidden), k, config);
}

CardinalitySolveReport SolveExactCardinality(const SetFunction& f, int k,
                                             const LocalSearchConfig& config) {
  const int n = f.size();
  if (k < 1 || k > n) {
    throw PreconditionError("exact cardinality needs 1 <= k <= n, got k=" +
                            std::to_string(k));
  }
  CardinalitySolveReport report;
  ElementSet all = Complement(n, {});
  if (2 * k <= n) {
    const LocalSearchOutcome s1 = LocalSearchCardinality(f, all, k, config);
    const LocalSearchOutcome s2 = SecondSet(f, s1.set, k, config);
    report.first = s1.set;
    report.second = s2.set;
    report.first_iterations = s1.iterations;
    report.second_iterations = s2.iterations;
  } else {
    const ComplementFunction g(f);
    const int k_prime = n - k;
    const LocalSearchOutcome s1 = LocalSearchCardinality(g, all, k_prime, config);
    const LocalSearchOutcome s2 = SecondSet(g, s1.set, k_prime, config);
    report.first = Complement(n, s1.set);
    report.second = Complement(n, s2.set);
    report.first_iterations = s1.iterations;
    report.second_iterations = s2.iterations;
    report.complemented = true;
  }
  report.first_value = f.Evaluate(report.first);
  report.second_value = f.Evaluate(report.second);
  if (report.second_value > report.first_value) {
    report.winner = report.second;
    report.winner_value = report.second_value;
  } else {
    report.winner = report.first;
    report.winner_value = report.first_value;
  }
  return report;
}

LocalSearchOutcome UnconstrainedLocalSearch(const SetFunction& f,
                                            const ElementSet& ground,
                                            const LocalSearchConfig& config) {
  const ElementSet g = CheckedGround(f, ground);
  if (!(config.epsilon > 0.0)) {
    throw PreconditionError("local search epsilon must be positive");
  }
  const int n = f.size();
  LocalSearchOutcome out;
  Membership in(n, 0);
  if (g.empty()) {
    out.value = f.ValueOf(in);
    return out;
  }
  const double size = static_cast<double>(g.size());
  const double relative = config.epsilon / (size * size);

  std::function<double(const Membership&)> objective;
  std::optional<MultilinearExtension> smooth;
  std::vector<double> point(n, 0.0);
  if (config.smoothing == SmoothingMode::kNone) {
    objective = [&f](const Membership& m) { return f.ValueOf(m); };
  } else {
    const ExtensionEstimator estimator =
        n <= 16 ? ExtensionEstimator::Exact()
                : ExtensionEstimator::MonteCarlo(
                      config.smoothing_samples,
                      DeriveSeed(config.seed, "smoothed-local-search"));
    smooth.emplace(f, estimator);
    objective = [&](const Membership& m) {
      for (int e : g) point[e] = m[e] ? 0.9 : 0.1;
      return smooth->Value(point);
    };
  }

  // Start from the best singleton.
  int start = -1;
  double start_value = 0.0;
  for (int e : Representatives(f, g, in, false)) {
    in[e] = 1;
    const double v = objective(in);
    in[e] = 0;
    if (start < 0 || v > start_value) {
      start = e;
      start_value = v;
    }
  }
  in[start] = 1;
  double value = start_value;
  out.iterations =
      AddDeleteSearch(f, g, objective, in, value, relative, config.max_iters);

  const double inside = f.ValueOf(in);
  Membership flipped(n, 0);
  for (int e : g) flipped[e] = in[e] ? 0 : 1;
  const double outside = f.ValueOf(flipped);
  if (outside > inside) {
    out.set = FromMembership(flipped);
    out.value = outside;
  } else {
    out.set = FromMembership(in);
    out.value = inside;
  }
  return out;
}

}  // namespace submod
