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

#ifndef SEQDICT_CLI_INSTANCE_FILE_HPP_
#define SEQDICT_CLI_INSTANCE_FILE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "seqdict/oracle.hpp"
#include "seqdict/posd.hpp"
#include "seqdict/seqopt.hpp"

namespace seqdict::cli {

inline constexpr int kSchemaVersion = 1;

using AnyInstance = std::variant<MatchingInstance, ArborescenceInstance, SatInstance, OsiInstance,
                                 PathsInstance, LowerBoundInstance, GeneralInstance>;

// One of osm, osa, oss, osi, paths, lowerbound, general.
std::string kind_of(const AnyInstance& inst);

// {"schema_version": 1, "kind": ..., "payload": {...}}. Rationals are "p/q"
// strings.
nlohmann::json to_json(const AnyInstance& inst);
// Throws std::invalid_argument on an unknown kind, a schema mismatch or an
// invalid payload.
AnyInstance from_json(const nlohmann::json& doc);

std::string serialize(const AnyInstance& inst);
AnyInstance parse_instance(std::string_view text);

ValuationOracle oracle_for(const AnyInstance& inst);
// The combinatorial structure behind the instance, if it has one.
std::optional<StructuredInstance> structured(const AnyInstance& inst);

}  // namespace seqdict::cli

#endif  // SEQDICT_CLI_INSTANCE_FILE_HPP_
