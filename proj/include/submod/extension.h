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

#ifndef SUBMOD_EXTENSION_H_
#define SUBMOD_EXTENSION_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "submod/set_function.h"

namespace submod {

enum class ExtensionBackend { kExact, kMonteCarlo };

struct Estimate {
  double mean = 0.0;
  // Standard error of the mean; zero for the exact backend.
  double std_error = 0.0;
  // Sample standard deviation of f(R); zero for the exact backend.
  double std_dev = 0.0;
};

// Configuration for evaluating the multilinear extension
//   F(x) = sum_S f(S) prod_{i in S} x_i prod_{i not in S} (1 - x_i).
//
// The exact backend sums over all 2^n subsets (n <= kMaxTableElements). The
// monte-carlo backend averages f over `samples` random subsets drawn from a
// generator seeded with `seed`, so results are a pure function of
// (x, seed, samples). Reusing one seed across calls gives common random
// numbers; use Substream() to decorrelate call sites.
class ExtensionEstimator {
 public:
  static ExtensionEstimator Exact();
  static ExtensionEstimator MonteCarlo(int64_t samples, uint64_t seed);

  // ceil(10 n^2 / epsilon^2).
  static int64_t DefaultSampleCount(int n, double epsilon = 0.05);

  // Exact up to kMaxTableElements, monte-carlo with the default sample count
  // above.
  static ExtensionEstimator Auto(int n, uint64_t seed, double epsilon = 0.05);

  ExtensionBackend backend() const { return backend_; }
  int64_t samples() const { return samples_; }
  uint64_t seed() const { return seed_; }
  bool exact() const { return backend_ == ExtensionBackend::kExact; }

  ExtensionEstimator Substream(uint64_t stream) const;
  ExtensionEstimator Substream(std::string_view tag) const;

  double Value(const SetFunction& f, std::span<const double> x) const;
  Estimate ValueWithError(const SetFunction& f,
                          std::span<const double> x) const;

  // Coordinate j is F(x | x_j = 1) - F(x | x_j = 0). The monte-carlo backend
  // evaluates both endpoints on the same random subsets.
  std::vector<double> Gradient(const SetFunction& f,
                               std::span<const double> x) const;

 private:
  ExtensionEstimator(ExtensionBackend backend, int64_t samples, uint64_t seed)
      : backend_(backend), samples_(samples), seed_(seed) {}

  ExtensionBackend backend_;
  int64_t samples_;
  uint64_t seed_;
};

// An estimator bound to one function. For the exact backend the value table
// is computed once, so repeated evaluations cost O(2^n) arithmetic each
// instead of 2^n oracle calls. Holds a reference to `f`.
class MultilinearExtension {
 public:
  MultilinearExtension(const SetFunction& f, ExtensionEstimator estimator);

  int size() const { return f_.size(); }
  const SetFunction& function() const { return f_; }
  const ExtensionEstimator& estimator() const { return estimator_; }

  double Value(std::span<const double> x) const;
  Estimate ValueWithError(std::span<const double> x) const;
  std::vector<double> Gradient(std::span<const double> x) const;

  // Monte-carlo draws come from substream `stream` of the estimator seed.
  // Identical to the plain overloads for the exact backend.
  double Value(std::span<const double> x, uint64_t stream) const;
  std::vector<double> Gradient(std::span<const double> x,
                               uint64_t stream) const;

 private:
  void CheckPoint(std::span<const double> x) const;
  double ExactValue(std::span<const double> x) const;
  Estimate SampledValue(std::span<const double> x, uint64_t seed) const;
  std::vector<double> SampledGradient(std::span<const double> x,
                                      uint64_t seed) const;
  std::vector<double> EndpointGradient(std::span<const double> x,
                                       uint64_t stream) const;

  const SetFunction& f_;
  ExtensionEstimator estimator_;
  bool closed_form_ = false;
  std::vector<double> table_;
};

// Checks 0 <= x_i <= 1 and the dimension; throws InvalidInputError.
void CheckFractionalPoint(std::span<const double> x, int n);

}  // namespace submod

#endif  // SUBMOD_EXTENSION_H_
