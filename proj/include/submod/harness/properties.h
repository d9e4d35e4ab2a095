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

#ifndef SUBMOD_HARNESS_PROPERTIES_H_
#define SUBMOD_HARNESS_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace submod::harness {

// Result of one invariant battery. A check is one asserted inequality;
// margins are (allowed side) - (tested side), so a violation has a negative
// margin.
struct SuiteResult {
  std::string name;
  int64_t trials = 0;
  int64_t checks = 0;
  int64_t violations = 0;
  double worst_margin = 0.0;
  bool passed = true;
  bool vacuous = false;
  std::vector<std::string> notes;
};

// Available batteries:
//   three-sets           f(S1 u C) + f(S1 n C) + f(S2 u C') >= f(C),
//                        trials = random tuples
//   submodularity        generators produce submodular functions,
//                        trials = instances
//   rounding-marginals   Pr[i in R] = x_i within 4 sigma, trials = seeds
//   rounding-expectation E f(R) >= F(x) - 4 sigma-hat under pipage,
//                        trials = seeds per instance
//   rounding-tail        upper-tail frequencies against exp(-mu d^2 / 3),
//                        trials = seeds per (x, a) pair
//   box-search           (1/beta) F(y) + f_max/(4n^2) + eps' >= F(x) for grid
//                        points x of the box, trials = instances
//   greedy-trajectory    F(y(1)) >= (1-1/e)(F(x v y(1)) - F_dmax)
//                        - (2/T) max|F|, trials = instances
//   greedy-monotone      F(y(1)) >= (1 - 1/e - 0.02) grid optimum on
//                        monotone instances, trials = instances
std::vector<std::string> SuiteNames();

// Throws InvalidInputError for an unknown suite or negative trials. Zero
// trials gives a vacuous pass with a warning note.
SuiteResult VerifyProperties(const std::string& suite, int64_t trials,
                             uint64_t seed);

}  // namespace submod::harness

#endif  // SUBMOD_HARNESS_PROPERTIES_H_
