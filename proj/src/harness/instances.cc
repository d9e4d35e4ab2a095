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

#include "submod/harness/instances.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "submod/error.h"
#include "submod/random.h"

namespace submod::harness {
namespace {

using nlohmann::json;

std::vector<WeightedEdge> RandomEdges(int n, double p, double lo, double hi,
                                      Rng& rng) {
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) edges.push_back({u, v, rng.UniformIn(lo, hi)});
    }
  }
  if (edges.empty() && n >= 2) {
    const int u = static_cast<int>(rng.Below(n - 1));
    edges.push_back({u, u + 1, rng.UniformIn(lo, hi)});
  }
  return edges;
}

std::unique_ptr<CoverageFunction> RandomCoverage(int n, int universe,
                                                 double density, double lo,
                                                 double hi, Rng& rng) {
  std::vector<double> weights(universe);
  for (double& w : weights) w = rng.UniformIn(lo, hi);
  std::vector<std::vector<int>> sets(n);
  for (int i = 0; i < n; ++i) {
    for (int item = 0; item < universe; ++item) {
      if (rng.Bernoulli(density)) sets[i].push_back(item);
    }
    if (sets[i].empty()) sets[i].push_back(static_cast<int>(rng.Below(universe)));
  }
  return std::make_unique<CoverageFunction>(n, std::move(weights),
                                            std::move(sets));
}

std::unique_ptr<SetFunction> RandomTable(const InstanceSpec& spec, Rng& rng) {
  const int n = spec.n;
  if (n > kMaxTableElements) {
    throw BackendLimitError("explicit-table generator limited to n <= 20");
  }
  const uint32_t count = uint32_t{1} << n;
  std::vector<double> table(count, 0.0);
  const auto coverage = RandomCoverage(n, n, spec.density, spec.weight_low,
                                       spec.weight_high, rng);
  if (spec.distribution == "mixture") {
    // Cut + coverage + a symmetric concave function of |S|.
    const GraphCutFunction cut(n, RandomEdges(n, 0.5, 0.0, 1.0, rng));
    const double scale = rng.UniformIn(0.0, 1.0);
    Membership m(n);
    for (uint32_t mask = 0; mask < count; ++mask) {
      int size = 0;
      for (int i = 0; i < n; ++i) {
        m[i] = (mask >> i) & 1u;
        size += m[i];
      }
      table[mask] = cut.ValueOf(m) + coverage->ValueOf(m) +
                    scale * size * (n - size) / static_cast<double>(n);
    }
  } else if (spec.distribution == "monotone") {
    // Coverage + a square root of a positive modular function.
    std::vector<double> w(n);
    for (double& v : w) v = rng.UniformIn(spec.weight_low, spec.weight_high);
    Membership m(n);
    for (uint32_t mask = 0; mask < count; ++mask) {
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        m[i] = (mask >> i) & 1u;
        if (m[i]) total += w[i];
      }
      table[mask] = coverage->ValueOf(m) + std::sqrt(total);
    }
  } else {
    throw InvalidInputError("unknown table distribution '" + spec.distribution +
                            "'");
  }
  return std::make_unique<TableFunction>(n, std::move(table));
}

Matroid MatroidFromJson(const json& j, int n) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "free") return Matroid::Free(n);
  if (kind == "uniform") return Matroid::Uniform(n, j.at("rank").get<int>());
  if (kind == "partition") {
    auto blocks = j.at("blocks").get<std::vector<int>>();
    if (static_cast<int>(blocks.size()) != n) {
      throw InvalidInputError("partition blocks must list one block per element");
    }
    return Matroid::Partition(std::move(blocks),
                              j.at("capacities").get<std::vector<int>>());
  }
  throw InvalidInputError("unknown matroid kind '" + kind + "'");
}

json MatroidToJson(const Matroid& m) {
  switch (m.kind()) {
    case MatroidKind::kFree:
      return {{"kind", "free"}};
    case MatroidKind::kUniform:
      return {{"kind", "uniform"}, {"rank", m.capacity(0)}};
    case MatroidKind::kPartition:
      return {{"kind", "partition"},
              {"blocks", m.block_assignment()},
              {"capacities", m.capacities()}};
  }
  return {};
}

KnapsackSystem KnapsacksFromJson(const json& j, int n) {
  return KnapsackSystem(
      n, j.at("weights").get<std::vector<std::vector<double>>>(),
      j.at("capacities").get<std::vector<double>>());
}

void MergeConstraint(const json& j, int n, Constraint& c) {
  if (j.contains("intersection")) {
    for (const json& part : j.at("intersection")) MergeConstraint(part, n, c);
  }
  if (j.contains("cardinality")) {
    int k = j.at("cardinality").get<int>();
    if (k < 1 || k > n) {
      throw InvalidInputError("cardinality must lie in [1, n]");
    }
    c.cardinality = k;
  }
  if (j.contains("matroid")) {
    if (c.matroid) throw InvalidInputError("at most one matroid is supported");
    c.matroid = MatroidFromJson(j.at("matroid"), n);
  }
  if (j.contains("knapsacks")) {
    KnapsackSystem k = KnapsacksFromJson(j.at("knapsacks"), n);
    if (c.knapsacks) {
      auto weights = c.knapsacks->weights();
      auto caps = c.knapsacks->capacities();
      weights.insert(weights.end(), k.weights().begin(), k.weights().end());
      caps.insert(caps.end(), k.capacities().begin(), k.capacities().end());
      k = KnapsackSystem(n, std::move(weights), std::move(caps));
    }
    c.knapsacks = std::move(k);
  }
}

}  // namespace

std::string ToString(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kGnpCut:
      return "gnp-cut";
    case GeneratorKind::kCoverage:
      return "coverage";
    case GeneratorKind::kModular:
      return "modular";
    case GeneratorKind::kExplicitTable:
      return "explicit-table";
  }
  return "unknown";
}

GeneratorKind ParseGeneratorKind(const std::string& name) {
  if (name == "gnp-cut") return GeneratorKind::kGnpCut;
  if (name == "coverage") return GeneratorKind::kCoverage;
  if (name == "modular") return GeneratorKind::kModular;
  if (name == "explicit-table") return GeneratorKind::kExplicitTable;
  throw InvalidInputError("unknown generator '" + name + "'");
}

std::unique_ptr<SetFunction> Generate(const InstanceSpec& spec) {
  if (spec.n < 1) throw InvalidInputError("instance needs n >= 1");
  Rng rng(DeriveSeed(spec.seed, "instance-" + ToString(spec.generator)));
  switch (spec.generator) {
    case GeneratorKind::kGnpCut:
      return std::make_unique<GraphCutFunction>(
          spec.n, RandomEdges(spec.n, spec.edge_probability, spec.weight_low,
                              spec.weight_high, rng));
    case GeneratorKind::kCoverage:
      return RandomCoverage(spec.n, spec.universe > 0 ? spec.universe : 2 * spec.n,
                            spec.density, spec.weight_low, spec.weight_high,
                            rng);
    case GeneratorKind::kModular: {
      std::vector<double> w(spec.n);
      for (double& v : w) v = rng.UniformIn(spec.weight_low, spec.weight_high);
      return MakeModular(std::move(w));
    }
    case GeneratorKind::kExplicitTable:
      return RandomTable(spec, rng);
  }
  throw InvalidInputError("unknown generator");
}

Constraint GenerateConstraint(int n, const ConstraintSpec& spec) {
  Rng rng(DeriveSeed(spec.seed, "constraint"));
  Constraint c;
  auto knapsacks = [&] {
    std::vector<std::vector<double>> w(spec.knapsacks, std::vector<double>(n));
    for (auto& row : w) {
      for (double& v : row) v = rng.UniformIn(spec.weight_low, spec.weight_high);
    }
    return KnapsackSystem(n, std::move(w),
                          std::vector<double>(spec.knapsacks, 1.0));
  };
  switch (spec.kind) {
    case ConstraintSpec::Kind::kNone:
      break;
    case ConstraintSpec::Kind::kCardinality:
      c.cardinality = spec.cardinality;
      break;
    case ConstraintSpec::Kind::kKnapsacks:
      c.knapsacks = knapsacks();
      break;
    case ConstraintSpec::Kind::kUniformMatroid:
      c.matroid = Matroid::Uniform(n, spec.cardinality);
      break;
    case ConstraintSpec::Kind::kPartitionMatroid: {
      std::vector<int> blocks(n);
      for (int i = 0; i < n; ++i) blocks[i] = i % spec.blocks;
      c.matroid = Matroid::Partition(std::move(blocks),
                                     std::vector<int>(spec.blocks, spec.cardinality));
      break;
    }
    case ConstraintSpec::Kind::kMatroidKnapsacks:
      c.matroid = Matroid::Uniform(n, spec.cardinality);
      c.knapsacks = knapsacks();
      break;
  }
  return c;
}

namespace {

constexpr std::pair<ConstraintSpec::Kind, const char*> kConstraintKinds[] = {
    {ConstraintSpec::Kind::kNone, "none"},
    {ConstraintSpec::Kind::kCardinality, "cardinality"},
    {ConstraintSpec::Kind::kKnapsacks, "knapsacks"},
    {ConstraintSpec::Kind::kUniformMatroid, "uniform-matroid"},
    {ConstraintSpec::Kind::kPartitionMatroid, "partition-matroid"},
    {ConstraintSpec::Kind::kMatroidKnapsacks, "matroid-knapsacks"},
};

}  // namespace

json InstanceSpecToJson(const InstanceSpec& spec) {
  return {{"generator", ToString(spec.generator)},
          {"n", spec.n},
          {"edge_probability", spec.edge_probability},
          {"weight_low", spec.weight_low},
          {"weight_high", spec.weight_high},
          {"universe", spec.universe},
          {"density", spec.density},
          {"distribution", spec.distribution},
          {"seed", spec.seed}};
}

InstanceSpec InstanceSpecFromJson(const json& j) {
  InstanceSpec s;
  try {
    if (j.contains("generator")) {
      s.generator = ParseGeneratorKind(j.at("generator").get<std::string>());
    }
    s.n = j.value("n", s.n);
    s.edge_probability = j.value("edge_probability", s.edge_probability);
    s.weight_low = j.value("weight_low", s.weight_low);
    s.weight_high = j.value("weight_high", s.weight_high);
    s.universe = j.value("universe", s.universe);
    s.density = j.value("density", s.density);
    s.distribution = j.value("distribution", s.distribution);
    s.seed = j.value("seed", s.seed);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("bad instance spec: ") + e.what());
  }
  return s;
}

json ConstraintSpecToJson(const ConstraintSpec& spec) {
  std::string kind;
  for (const auto& [k, name] : kConstraintKinds) {
    if (k == spec.kind) kind = name;
  }
  return {{"kind", kind},
          {"cardinality", spec.cardinality},
          {"knapsacks", spec.knapsacks},
          {"weight_low", spec.weight_low},
          {"weight_high", spec.weight_high},
          {"blocks", spec.blocks},
          {"seed", spec.seed}};
}

ConstraintSpec ConstraintSpecFromJson(const json& j) {
  ConstraintSpec s;
  try {
    if (j.contains("kind")) {
      const std::string kind = j.at("kind").get<std::string>();
      bool found = false;
      for (const auto& [k, name] : kConstraintKinds) {
        if (kind == name) {
          s.kind = k;
          found = true;
        }
      }
      if (!found) throw InvalidInputError("unknown constraint kind '" + kind + "'");
    }
    s.cardinality = j.value("cardinality", s.cardinality);
    s.knapsacks = j.value("knapsacks", s.knapsacks);
    s.weight_low = j.value("weight_low", s.weight_low);
    s.weight_high = j.value("weight_high", s.weight_high);
    s.blocks = j.value("blocks", s.blocks);
    s.seed = j.value("seed", s.seed);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("bad constraint spec: ") + e.what());
  }
  if (s.blocks < 1 || s.knapsacks < 0) {
    throw InvalidInputError("constraint spec value out of range");
  }
  return s;
}

json InstanceToJson(const SetFunction& f) {
  if (const auto* cut = dynamic_cast<const GraphCutFunction*>(&f)) {
    json edges = json::array();
    for (const WeightedEdge& e : cut->edges()) edges.push_back({e.u, e.v, e.weight});
    return {{"kind", "graph-cut"}, {"n", f.size()}, {"edges", edges}};
  }
  if (const auto* cov = dynamic_cast<const CoverageFunction*>(&f)) {
    return {{"kind", "weighted-coverage"},
            {"n", f.size()},
            {"coverage",
             {{"universe_weights", cov->universe_weights()},
              {"sets", cov->sets()}}}};
  }
  if (const auto* table = dynamic_cast<const TableFunction*>(&f)) {
    return {{"kind", "explicit-table"}, {"n", f.size()}, {"table", table->table()}};
  }
  // Anything else is serialized by value.
  return {{"kind", "explicit-table"}, {"n", f.size()}, {"table", Tabulate(f)}};
}

std::unique_ptr<SetFunction> InstanceFromJson(const json& j, bool validate) {
  std::unique_ptr<SetFunction> f;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (kind == "graph-cut") {
      std::vector<WeightedEdge> edges;
      for (const json& e : j.at("edges")) {
        if (e.size() != 3) throw InvalidInputError("edges are [u, v, w] triples");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
      }
      f = std::make_unique<GraphCutFunction>(n, std::move(edges));
    } else if (kind == "weighted-coverage") {
      const json& c = j.at("coverage");
      f = std::make_unique<CoverageFunction>(
          n, c.at("universe_weights").get<std::vector<double>>(),
          c.at("sets").get<std::vector<std::vector<int>>>());
    } else if (kind == "explicit-table") {
      f = std::make_unique<TableFunction>(
          n, j.at("table").get<std::vector<double>>());
    } else {
      throw InvalidInputError("unknown instance kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed instance: ") + e.what());
  }
  if (validate) ValidateSubmodular(*f, 0);
  return f;
}

json ConstraintToJson(const Constraint& c) {
  json parts = json::array();
  if (c.cardinality) parts.push_back({{"cardinality", *c.cardinality}});
  if (c.matroid) parts.push_back({{"matroid", MatroidToJson(*c.matroid)}});
  if (c.knapsacks) {
    parts.push_back({{"knapsacks",
                      {{"weights", c.knapsacks->weights()},
                       {"capacities", c.knapsacks->capacities()}}}});
  }
  if (parts.size() == 1) return parts[0];
  return {{"intersection", parts}};
}

Constraint ConstraintFromJson(const json& j, int n) {
  Constraint c;
  try {
    MergeConstraint(j, n, c);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed constraint: ") + e.what());
  }
  if (c.cardinality && (c.matroid || c.knapsacks)) {
    throw InvalidInputError("exact cardinality cannot be combined");
  }
  return c;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace submod::harness
