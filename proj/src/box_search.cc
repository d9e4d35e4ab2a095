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

#include <algorithm>
#include <cmath>
#include <utility>

#include "submod/error.h"

namespace submod {

ReplicatedFunction::ReplicatedFunction(const MultilinearExtension& extension,
                                       std::vector<int> copies,
                                       double granularity)
    : extension_(extension),
      copies_(std::move(copies)),
      granularity_(granularity) {
  for (int i = 0; i < static_cast<int>(copies_.size()); ++i) {
    owner_.insert(owner_.end(), copies_[i], i);
  }
}

std::vector<double> ReplicatedFunction::PointOf(
    std::span<const uint8_t> membership) const {
  std::vector<double> y(copies_.size(), 0.0);
  std::vector<int> count(copies_.size(), 0);
  for (size_t e = 0; e < owner_.size(); ++e) {
    if (membership[e]) ++count[owner_[e]];
  }
  for (size_t i = 0; i < copies_.size(); ++i) {
    y[i] = std::min(1.0, count[i] * granularity_);
  }
  return y;
}

double ReplicatedFunction::ValueOf(std::span<const uint8_t> membership) const {
  return extension_.Value(PointOf(membership));
}

std::optional<double> ReplicatedFunction::ClosedFormExtension(
    std::span<const double> x) const {
  std::vector<double> y(copies_.size(), 0.0);
  for (size_t e = 0; e < owner_.size(); ++e) y[owner_[e]] += x[e];
  for (double& v : y) v = std::min(1.0, v * granularity_);
  return extension_.Value(y);
}

double BoxGranularity(int n, const BoxSearchConfig& config) {
  if (config.granularity > 0.0) return config.granularity;
  const double nn = static_cast<double>(n);
  return config.fine_grid ? 1.0 / (8.0 * nn * nn * nn * nn) : 1.0 / (4.0 * nn);
}

BoxSearchResult MaximizeOverBox(const MultilinearExtension& extension,
                                std::span<const double> upper,
                                const BoxSearchConfig& config) {
  const int n = extension.size();
  CheckFractionalPoint(upper, n);
  BoxSearchResult result;
  result.granularity = BoxGranularity(n, config);
  if (!(result.granularity > 0.0 && result.granularity <= 1.0)) {
    throw InvalidInputError("box granularity must lie in (0, 1]");
  }

  const SetFunction& f = extension.function();
  Membership single(n, 0);
  for (int i = 0; i < n; ++i) {
    single[i] = 1;
    result.f_max = std::max(result.f_max, f.ValueOf(single));
    single[i] = 0;
  }
  result.grid_error_bound = n * result.granularity * result.f_max;

  int64_t total = 0;
  result.copies.resize(n);
  for (int i = 0; i < n; ++i) {
    result.copies[i] =
        static_cast<int>(std::floor(upper[i] / result.granularity + 1e-9));
    total += result.copies[i];
  }
  if (total > kMaxReplicatedElements) {
    throw BackendLimitError("replicated ground set too large; use a coarser "
                            "granularity");
  }
  if (total == 0) {
    result.point.assign(n, 0.0);
    result.value = extension.Value(result.point);
    return result;
  }

  const ReplicatedFunction g(extension, result.copies, result.granularity);
  const LocalSearchOutcome best =
      UnconstrainedLocalSearch(g, Complement(g.size(), {}), config.local_search);
  result.point = g.PointOf(ToMembership(g.size(), best.set));
  result.value = best.value;
  result.iterations = best.iterations;
  return result;
}

}  // namespace submod
