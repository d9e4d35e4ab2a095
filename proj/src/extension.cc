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
#include <string>

#include "submod/error.h"
#include "submod/random.h"

namespace submod {

void CheckFractionalPoint(std::span<const double> x, int n) {
  if (static_cast<int>(x.size()) != n) {
    throw InvalidInputError("point has dimension " + std::to_string(x.size()) +
                            ", expected " + std::to_string(n));
  }
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidInputError("coordinate " + std::to_string(v) +
                              " outside [0, 1]");
    }
  }
}

ExtensionEstimator ExtensionEstimator::Exact() {
  return ExtensionEstimator(ExtensionBackend::kExact, 0, 0);
}

ExtensionEstimator ExtensionEstimator::MonteCarlo(int64_t samples,
                                                  uint64_t seed) {
  if (samples < 1) throw InvalidInputError("sample count must be positive");
  return ExtensionEstimator(ExtensionBackend::kMonteCarlo, samples, seed);
}

int64_t ExtensionEstimator::DefaultSampleCount(int n, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidInputError("epsilon must be positive");
  return static_cast<int64_t>(
      std::ceil(10.0 * n * static_cast<double>(n) / (epsilon * epsilon)));
}

ExtensionEstimator ExtensionEstimator::Auto(int n, uint64_t seed,
                                            double epsilon) {
  if (n <= kMaxTableElements) return Exact();
  return MonteCarlo(DefaultSampleCount(n, epsilon), seed);
}

ExtensionEstimator ExtensionEstimator::Substream(uint64_t stream) const {
  ExtensionEstimator copy = *this;
  copy.seed_ = DeriveSeed(seed_, stream);
  return copy;
}

ExtensionEstimator ExtensionEstimator::Substream(std::string_view tag) const {
  return Substream(TagHash(tag));
}

double ExtensionEstimator::Value(const SetFunction& f,
                                 std::span<const double> x) const {
  return MultilinearExtension(f, *this).Value(x);
}

Estimate ExtensionEstimator::ValueWithError(const SetFunction& f,
                                            std::span<const double> x) const {
  return MultilinearExtension(f, *this).ValueWithError(x);
}

std::vector<double> ExtensionEstimator::Gradient(
    const SetFunction& f, std::span<const double> x) const {
  return MultilinearExtension(f, *this).Gradient(x);
}

MultilinearExtension::MultilinearExtension(const SetFunction& f,
                                           ExtensionEstimator estimator)
    : f_(f), estimator_(estimator) {
  std::vector<double> probe(f.size(), 0.0);
  closed_form_ = f.ClosedFormExtension(probe).has_value();
  if (!closed_form_ && estimator_.exact()) table_ = Tabulate(f);
}

void MultilinearExtension::CheckPoint(std::span<const double> x) const {
  CheckFractionalPoint(x, f_.size());
}

double MultilinearExtension::ExactValue(std::span<const double> x) const {
  // Fold one coordinate at a time, highest bit first:
  // t[m] <- (1 - x_i) t[m] + x_i t[m + 2^i].
  std::vector<double> t = table_;
  for (int i = f_.size() - 1; i >= 0; --i) {
    const size_t half = size_t{1} << i;
    const double p = x[i];
    for (size_t m = 0; m < half; ++m) {
      t[m] = (1.0 - p) * t[m] + p * t[m + half];
    }
  }
  return t[0];
}

Estimate MultilinearExtension::SampledValue(std::span<const double> x,
                                            uint64_t seed) const {
  const int n = f_.size();
  Rng rng(seed);
  Membership sample(n);
  double mean = 0.0;
  double m2 = 0.0;
  const int64_t count = estimator_.samples();
  for (int64_t s = 0; s < count; ++s) {
    for (int i = 0; i < n; ++i) sample[i] = rng.Uniform() < x[i];
    const double v = f_.ValueOf(sample);
    const double delta = v - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (v - mean);
  }
  Estimate e;
  e.mean = mean;
  if (count > 1) {
    e.std_dev = std::sqrt(m2 / static_cast<double>(count - 1));
    e.std_error = e.std_dev / std::sqrt(static_cast<double>(count));
  }
  return e;
}

std::vector<double> MultilinearExtension::SampledGradient(
    std::span<const double> x, uint64_t seed) const {
  const int n = f_.size();
  Rng rng(seed);
  Membership sample(n);
  std::vector<double> grad(n, 0.0);
  const int64_t count = estimator_.samples();
  for (int64_t s = 0; s < count; ++s) {
    for (int i = 0; i < n; ++i) sample[i] = rng.Uniform() < x[i];
    const double base = f_.ValueOf(sample);
    for (int j = 0; j < n; ++j) {
      sample[j] ^= 1;
      const double toggled = f_.ValueOf(sample);
      sample[j] ^= 1;
      grad[j] += sample[j] ? base - toggled : toggled - base;
    }
  }
  for (double& g : grad) g /= static_cast<double>(count);
  return grad;
}

std::vector<double> MultilinearExtension::EndpointGradient(
    std::span<const double> x, uint64_t stream) const {
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> grad(point.size());
  for (size_t j = 0; j < point.size(); ++j) {
    const double saved = point[j];
    point[j] = 1.0;
    const double high = Value(point, stream);
    point[j] = 0.0;
    const double low = Value(point, stream);
    point[j] = saved;
    grad[j] = high - low;
  }
  return grad;
}

double MultilinearExtension::Value(std::span<const double> x) const {
  return ValueWithError(x).mean;
}

Estimate MultilinearExtension::ValueWithError(std::span<const double> x) const {
  CheckPoint(x);
  if (closed_form_) return Estimate{*f_.ClosedFormExtension(x), 0.0, 0.0};
  if (estimator_.exact()) return Estimate{ExactValue(x), 0.0, 0.0};
  return SampledValue(x, estimator_.seed());
}

double MultilinearExtension::Value(std::span<const double> x,
                                   uint64_t stream) const {
  CheckPoint(x);
  if (closed_form_) return *f_.ClosedFormExtension(x);
  if (estimator_.exact()) return ExactValue(x);
  return SampledValue(x, DeriveSeed(estimator_.seed(), stream)).mean;
}

std::vector<double> MultilinearExtension::Gradient(
    std::span<const double> x) const {
  CheckPoint(x);
  if (closed_form_ || estimator_.exact()) return EndpointGradient(x, 0);
  return SampledGradient(x, estimator_.seed());
}

std::vector<double> MultilinearExtension::Gradient(std::span<const double> x,
                                                   uint64_t stream) const {
  CheckPoint(x);
  if (closed_form_ || estimator_.exact()) return EndpointGradient(x, 0);
  return SampledGradient(x, DeriveSeed(estimator_.seed(), stream));
}

}  // namespace submod
