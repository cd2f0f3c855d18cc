// Copyright 2026 The seqdict Authors.
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

#include "instance_file.hpp"

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace seqdict::cli {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json matrix_to_json(const std::vector<std::vector<Value>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const Value& v : row) r.push_back(format_rational(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<Value>> matrix_from_json(const json& j) {
  std::vector<std::vector<Value>> m;
  for (const json& row : j.at("weights")) {
    std::vector<Value>& r = m.emplace_back();
    for (const json& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
  }
  return m;
}

json osm_payload(const MatchingInstance& m) {
  return {{"weights", matrix_to_json(m.weights())}, {"preferences", m.preferences()}};
}

json osa_payload(const ArborescenceInstance& a) {
  return {{"weights", matrix_to_json(a.weights())}, {"preferences", a.preferences()}};
}

json oss_payload(const SatInstance& s) {
  json clauses = json::array();
  for (const Clause& c : s.clauses) {
    clauses.push_back({{"literals", c.literals}, {"weight", format_rational(c.weight)}});
  }
  return {{"n", s.n}, {"clauses", std::move(clauses)}, {"tie_default", s.tie_default}};
}

SatInstance oss_from(const json& p) {
  std::vector<Clause> clauses;
  for (const json& c : p.at("clauses")) {
    clauses.push_back({c.at("literals").get<std::vector<Literal>>(),
                       parse_rational(c.at("weight").get<std::string>())});
  }
  std::optional<std::vector<bool>> ties;
  if (p.contains("tie_default")) ties = p.at("tie_default").get<std::vector<bool>>();
  return SatInstance::make(p.at("n").get<std::size_t>(), std::move(clauses), std::move(ties));
}

}  // namespace

std::string kind_of(const AnyInstance& inst) {
  return std::visit(overloaded{
                        [](const MatchingInstance&) { return "osm"; },
                        [](const ArborescenceInstance&) { return "osa"; },
                        [](const SatInstance&) { return "oss"; },
                        [](const OsiInstance&) { return "osi"; },
                        [](const PathsInstance&) { return "paths"; },
                        [](const LowerBoundInstance&) { return "lowerbound"; },
                        [](const GeneralInstance&) { return "general"; },
                    },
                    inst);
}

json to_json(const AnyInstance& inst) {
  json payload = std::visit(
      overloaded{
          [](const MatchingInstance& m) { return osm_payload(m); },
          [](const ArborescenceInstance& a) { return osa_payload(a); },
          [](const SatInstance& s) { return oss_payload(s); },
          [](const OsiInstance& g) { return json{{"adjacency", g.adjacency}}; },
          [](const PathsInstance& p) { return json{{"weights", matrix_to_json(p.weights)}}; },
          [](const LowerBoundInstance& l) {
            return json{{"n", l.n}, {"c", l.c}, {"hidden_pi", l.hidden_pi.agents()}};
          },
          [](const GeneralInstance& g) {
            return json{{"n", g.n}, {"seed", g.seed}, {"denominator", g.denominator}};
          },
      },
      inst);
  return {{"schema_version", kSchemaVersion}, {"kind", kind_of(inst)}, {"payload", std::move(payload)}};
}

AnyInstance from_json(const json& doc) {
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kSchemaVersion) {
      throw std::invalid_argument("unsupported schema_version " + std::to_string(version));
    }
    const std::string kind = doc.at("kind").get<std::string>();
    const json& p = doc.at("payload");
    if (kind == "osm") {
      return MatchingInstance(matrix_from_json(p),
                              p.at("preferences").get<std::vector<std::vector<std::size_t>>>());
    }
    if (kind == "osa") {
      return ArborescenceInstance(matrix_from_json(p),
                                  p.at("preferences").get<std::vector<std::vector<std::size_t>>>());
    }
    if (kind == "oss") return oss_from(p);
    if (kind == "osi") {
      OsiInstance g{p.at("adjacency").get<std::vector<std::vector<bool>>>()};
      g.validate();
      return g;
    }
    if (kind == "paths") {
      PathsInstance inst{matrix_from_json(p)};
      inst.validate();
      return inst;
    }
    if (kind == "lowerbound") {
      LowerBoundInstance l{p.at("n").get<std::size_t>(), p.at("c").get<std::size_t>(),
                           ActionSeq(p.at("hidden_pi").get<std::vector<AgentId>>())};
      l.validate();
      return l;
    }
    if (kind == "general") {
      GeneralInstance g{p.at("n").get<std::size_t>(), p.at("seed").get<std::uint64_t>(),
                        p.at("denominator").get<std::uint64_t>()};
      g.validate();
      return g;
    }
    throw std::invalid_argument("unknown instance kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance file: ") + e.what());
  }
}

std::string serialize(const AnyInstance& inst) { return to_json(inst).dump(2) + "\n"; }

AnyInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance file is not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

ValuationOracle oracle_for(const AnyInstance& inst) {
  return std::visit(overloaded{
                        [](const LowerBoundInstance& l) { return make_lower_bound_oracle(l); },
                        [](const GeneralInstance& g) { return make_general_oracle(g); },
                        [](const auto& s) { return make_oracle(StructuredInstance(s)); },
                    },
                    inst);
}

std::optional<StructuredInstance> structured(const AnyInstance& inst) {
  return std::visit(overloaded{
                        [](const LowerBoundInstance&) -> std::optional<StructuredInstance> {
                          return std::nullopt;
                        },
                        [](const GeneralInstance&) -> std::optional<StructuredInstance> {
                          return std::nullopt;
                        },
                        [](const auto& s) -> std::optional<StructuredInstance> { return s; },
                    },
                    inst);
}

}  // namespace seqdict::cli
