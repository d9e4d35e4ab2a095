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

#ifndef SUBMOD_BOX_SEARCH_H_
#define SUBMOD_BOX_SEARCH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "submod/extension.h"
#include "submod/local_search.h"

namespace submod {

struct BoxSearchConfig {
  // Grid step delta. Zero selects 1/(4n), or 1/(8n^4) when fine_grid is set.
  double granularity = 0.0;
  bool fine_grid = false;
  LocalSearchConfig local_search;
};

struct BoxSearchResult {
  std::vector<double> point;
  double value = 0.0;
  double granularity = 0.0;
  std::vector<int> copies;  // s_i = floor(u_i / delta)
  int64_t iterations = 0;
  // n * delta * f_max: how far the best grid point of the box can fall
  // below the best point of the box.
  double grid_error_bound = 0.0;
  // max_i f({i}).
  double f_max = 0.0;
};

// Upper limit on the replicated ground set size.
inline constexpr int64_t kMaxReplicatedElements = 1'000'000;

// Set function over a multiset with s_i interchangeable copies of each
// element i: g(T) = F(delta |T_1|, ..., delta |T_n|). Its multilinear
// extension is F at the per-element averaged point, which is exposed as a
// closed form. Holds a reference to `extension`.
class ReplicatedFunction final : public SetFunction {
 public:
  ReplicatedFunction(const MultilinearExtension& extension,
                     std::vector<int> copies, double granularity);

  int size() const override { return static_cast<int>(owner_.size()); }
  double ValueOf(std::span<const uint8_t> membership) const override;
  int SymmetryClass(int element) const override { return owner_[element]; }
  std::optional<double> ClosedFormExtension(
      std::span<const double> x) const override;

  // The point of the original ground set that `membership` represents.
  std::vector<double> PointOf(std::span<const uint8_t> membership) const;
  int owner(int element) const { return owner_[element]; }

 private:
  const MultilinearExtension& extension_;
  std::vector<int> copies_;
  std::vector<int> owner_;
  double granularity_;
};

// Approximately maximizes F over the box {0 <= y <= u} by running the
// unconstrained local search on the replicated ground set. With inner ratio
// beta, (1/beta) F(y) >= F(z) - O(eps) for every grid point z of the box.
BoxSearchResult MaximizeOverBox(const MultilinearExtension& extension,
                                std::span<const double> upper,
                                const BoxSearchConfig& config);

double BoxGranularity(int n, const BoxSearchConfig& config);

}  // namespace submod

#endif  // SUBMOD_BOX_SEARCH_H_
