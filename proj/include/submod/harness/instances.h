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

#ifndef SUBMOD_HARNESS_INSTANCES_H_
#define SUBMOD_HARNESS_INSTANCES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "submod/knapsack.h"
#include "submod/matroid.h"
#include "submod/set_function.h"

namespace submod::harness {

enum class GeneratorKind { kGnpCut, kCoverage, kModular, kExplicitTable };

std::string ToString(GeneratorKind kind);
GeneratorKind ParseGeneratorKind(const std::string& name);

// Random submodular instance description. Unused fields are ignored by the
// generators that do not need them.
struct InstanceSpec {
  GeneratorKind generator = GeneratorKind::kGnpCut;
  int n = 8;
  double edge_probability = 0.5;   // gnp-cut
  double weight_low = 0.1;         // edge, item or modular weights
  double weight_high = 1.0;
  int universe = 0;                // coverage; zero selects 2n
  double density = 0.3;            // coverage
  // explicit-table: "mixture" (non-monotone) or "monotone".
  std::string distribution = "mixture";
  uint64_t seed = 0;
};

std::unique_ptr<SetFunction> Generate(const InstanceSpec& spec);

// Constraint attached to an instance. Exact cardinality is exclusive with
// the other fields; matroid and knapsacks may be combined.
struct Constraint {
  std::optional<int> cardinality;
  std::optional<Matroid> matroid;
  std::optional<KnapsackSystem> knapsacks;
};

struct ConstraintSpec {
  enum class Kind {
    kNone,
    kCardinality,
    kKnapsacks,
    kUniformMatroid,
    kPartitionMatroid,
    kMatroidKnapsacks,
  };
  Kind kind = Kind::kNone;
  int cardinality = 1;     // exact cardinality k, or uniform rank
  int knapsacks = 1;       // number of knapsack rows
  double weight_low = 0.1;
  double weight_high = 0.6;
  int blocks = 2;          // partition matroid
  uint64_t seed = 0;
};

Constraint GenerateConstraint(int n, const ConstraintSpec& spec);

// JSON instance file: {"kind", "n", and "edges" | "coverage" | "table"}.
// Generator specs as JSON objects; missing fields keep their defaults.
// Constraint kinds: none, cardinality, knapsacks, uniform-matroid,
// partition-matroid, matroid-knapsacks.
nlohmann::json InstanceSpecToJson(const InstanceSpec& spec);
InstanceSpec InstanceSpecFromJson(const nlohmann::json& j);
nlohmann::json ConstraintSpecToJson(const ConstraintSpec& spec);
ConstraintSpec ConstraintSpecFromJson(const nlohmann::json& j);

nlohmann::json InstanceToJson(const SetFunction& f);
// Validates submodularity (exhaustive for n <= 12, sampled above).
std::unique_ptr<SetFunction> InstanceFromJson(const nlohmann::json& j,
                                              bool validate = true);

// JSON constraint file: {"cardinality": k} | {"matroid": {...}} |
// {"knapsacks": {"weights", "capacities"}} | {"intersection": [...]}.
nlohmann::json ConstraintToJson(const Constraint& c);
Constraint ConstraintFromJson(const nlohmann::json& j, int n);

nlohmann::json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const nlohmann::json& j);

}  // namespace submod::harness

#endif  // SUBMOD_HARNESS_INSTANCES_H_
