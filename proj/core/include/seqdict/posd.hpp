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

#ifndef SEQDICT_POSD_HPP_
#define SEQDICT_POSD_HPP_

#include <optional>
#include <variant>

#include "seqdict/caps.hpp"
#include "seqdict/oracle.hpp"
#include "seqdict/osa.hpp"
#include "seqdict/osi.hpp"
#include "seqdict/osm.hpp"
#include "seqdict/oss.hpp"
#include "seqdict/paths.hpp"
#include "seqdict/value.hpp"
#include "seqdict/welfare.hpp"

namespace seqdict {

using StructuredInstance =
    std::variant<MatchingInstance, ArborescenceInstance, SatInstance, OsiInstance, PathsInstance>;

ValuationOracle make_oracle(const StructuredInstance& inst);

// Optimum of the underlying combinatorial problem by exhaustive search:
// max-weight perfect matching, max-weight arborescence, MAX-SAT, maximum
// independent set size, max-weight path union.
Value underlying_optimum(const StructuredInstance& inst, const EnumerationCaps& caps = {});

struct PosdReport {
  Value optimum;
  OptimalSequence best;
  // optimum / best welfare; 1 when both are 0; nullopt (infinite) when only the
  // best welfare is 0.
  std::optional<Value> ratio;
};

PosdReport price_of_serial_dictatorship(const StructuredInstance& inst,
                                        const EnumerationCaps& caps = {});

// The ratio convention above, shared with reports.
std::optional<Value> welfare_ratio(const Value& numerator, const Value& denominator);

}  // namespace seqdict

#endif  // SEQDICT_POSD_HPP_
