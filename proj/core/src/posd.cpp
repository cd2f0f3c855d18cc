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

#include "seqdict/posd.hpp"

#include <type_traits>

namespace seqdict {

ValuationOracle make_oracle(const StructuredInstance& inst) {
  return std::visit(
      [](const auto& x) -> ValuationOracle {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MatchingInstance>) {
          return osm_oracle(x);
        } else if constexpr (std::is_same_v<T, ArborescenceInstance>) {
          return osa_oracle(x);
        } else if constexpr (std::is_same_v<T, SatInstance>) {
          return oss_oracle(x);
        } else if constexpr (std::is_same_v<T, OsiInstance>) {
          return osi_oracle(x);
        } else {
          return paths_oracle(x);
        }
      },
      inst);
}

Value underlying_optimum(const StructuredInstance& inst, const EnumerationCaps& caps) {
  return std::visit(
      [&caps](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MatchingInstance>) {
          return max_weight_perfect_matching(x, caps);
        } else if constexpr (std::is_same_v<T, ArborescenceInstance>) {
          return max_weight_arborescence(x, caps);
        } else if constexpr (std::is_same_v<T, SatInstance>) {
          return max_sat_weight(x, caps);
        } else if constexpr (std::is_same_v<T, OsiInstance>) {
          return Value(static_cast<long>(maximum_independent_set(x.adjacency, caps).size()));
        } else {
          return max_path_union_weight(x, caps);
        }
      },
      inst);
}

std::optional<Value> welfare_ratio(const Value& numerator, const Value& denominator) {
  if (denominator == 0) {
    if (numerator == 0) return Value(1);
    return std::nullopt;
  }
  return Value(numerator / denominator);
}

PosdReport price_of_serial_dictatorship(const StructuredInstance& inst, const EnumerationCaps& caps) {
  ValuationOracle oracle = make_oracle(inst);
  PosdReport report{underlying_optimum(inst, caps), brute_force_optimal_sequence(oracle, caps), std::nullopt};
  report.ratio = welfare_ratio(report.optimum, report.best.welfare);
  return report;
}

}  // namespace seqdict
