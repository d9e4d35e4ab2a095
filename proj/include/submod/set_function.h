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

#ifndef SUBMOD_SET_FUNCTION_H_
#define SUBMOD_SET_FUNCTION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace submod {

class Rng;

// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<int>;

// Indicator vector of a subset of a ground set {0, ..., n-1}.
using Membership = std::vector<uint8_t>;

Membership ToMembership(int n, const ElementSet& set);
ElementSet FromMembership(std::span<const uint8_t> membership);

// Sorts and deduplicates.
ElementSet Normalized(ElementSet set);

// Elements of {0..n-1} not in `set`.
ElementSet Complement(int n, const ElementSet& set);

// Set function f: 2^X -> R on the ground set X = {0, ..., n-1}.
//
// Implementations are immutable after construction and safe for concurrent
// reads. ValueOf() skips validation; Evaluate() and Marginal() check their
// arguments.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual int size() const = 0;

  // f of the set whose indicator is `membership` (length size()).
  virtual double ValueOf(std::span<const uint8_t> membership) const = 0;

  // Elements with equal class ids are interchangeable: swapping them never
  // changes f. Local search uses this to skip duplicate moves.
  virtual int SymmetryClass(int element) const { return element; }

  // The multilinear extension at x when the function knows it in closed
  // form (for example replicated ground sets). nullopt means "estimate it".
  virtual std::optional<double> ClosedFormExtension(
      std::span<const double> x) const {
    (void)x;
    return std::nullopt;
  }

  // f(S). Throws InvalidElementError for ids outside the ground set.
  double Evaluate(const ElementSet& set) const;

  // f(A + x) - f(A). Throws PreconditionError when x is in A.
  double Marginal(const ElementSet& base, int element) const;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

// Undirected graph cut: total weight of edges with exactly one endpoint in S.
class GraphCutFunction final : public SetFunction {
 public:
  GraphCutFunction(int n, std::vector<WeightedEdge> edges);

  int size() const override { return n_; }
  double ValueOf(std::span<const uint8_t> membership) const override;

  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
};

// Weighted coverage: element i covers the universe items sets[i]; f(S) is the
// total weight of covered items.
class CoverageFunction final : public SetFunction {
 public:
  CoverageFunction(int n, std::vector<double> universe_weights,
                   std::vector<std::vector<int>> sets);

  int size() const override { return n_; }
  double ValueOf(std::span<const uint8_t> membership) const override;

  const std::vector<double>& universe_weights() const {
    return universe_weights_;
  }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

 private:
  int n_;
  std::vector<double> universe_weights_;
  std::vector<std::vector<int>> sets_;
};

inline constexpr int kMaxTableElements = 20;

// Full value table indexed by subset bitmask (bit i set <=> element i in S).
class TableFunction final : public SetFunction {
 public:
  // Requires n <= kMaxTableElements and table.size() == 2^n.
  TableFunction(int n, std::vector<double> table);

  int size() const override { return n_; }
  double ValueOf(std::span<const uint8_t> membership) const override;

  double ValueOfMask(uint32_t mask) const { return table_[mask]; }
  const std::vector<double>& table() const { return table_; }

 private:
  int n_;
  std::vector<double> table_;
};

// Non-negative modular function, represented as coverage of private items.
std::unique_ptr<CoverageFunction> MakeModular(std::vector<double> weights);

// g(S) = f(X \ S). Holds a reference to `base`.
class ComplementFunction final : public SetFunction {
 public:
  explicit ComplementFunction(const SetFunction& base) : base_(base) {}

  int size() const override { return base_.size(); }
  double ValueOf(std::span<const uint8_t> membership) const override;

 private:
  const SetFunction& base_;
};

// g(S) = f(A u map(S)) - f(A) where map sends local id i to ground[i].
// Holds a reference to `base`. Values may be negative.
class ContractedFunction final : public SetFunction {
 public:
  ContractedFunction(const SetFunction& base, ElementSet fixed,
                     ElementSet ground);

  int size() const override { return static_cast<int>(ground_.size()); }
  double ValueOf(std::span<const uint8_t> membership) const override;

  const ElementSet& ground() const { return ground_; }
  const ElementSet& fixed() const { return fixed_; }
  double fixed_value() const { return fixed_value_; }

 private:
  const SetFunction& base_;
  ElementSet fixed_;
  ElementSet ground_;
  Membership scratch_template_;
  double fixed_value_;
};

// Tabulates f over all 2^n subsets. Throws BackendLimitError above
// kMaxTableElements.
std::vector<double> Tabulate(const SetFunction& f);

struct SubmodularityCheck {
  int64_t tests = 0;
  int64_t violations = 0;
  // Most negative f(A)+f(B)-f(A^B)-f(AvB) seen (0 when none were negative).
  double worst_gap = 0.0;
  double min_value = 0.0;
};

// Exhaustive check over all pairs (A, B) in the diminishing-returns form
// f_A(x) >= f_B(x) for A subset of B; requires n <= 12.
SubmodularityCheck CheckSubmodularExhaustive(const SetFunction& f,
                                             double tolerance = 1e-9);

// Random pairs (A, B) with each element included with probability 1/2.
SubmodularityCheck CheckSubmodularSampled(const SetFunction& f, Rng& rng,
                                          int64_t trials,
                                          double tolerance = 1e-9);

// Throws InvalidInputError when `f` is negative somewhere or violates
// submodularity; exhaustive for n <= 12, `sampled_trials` random pairs above.
void ValidateSubmodular(const SetFunction& f, uint64_t seed,
                        int64_t sampled_trials = 20000);

}  // namespace submod

#endif  // SUBMOD_SET_FUNCTION_H_
