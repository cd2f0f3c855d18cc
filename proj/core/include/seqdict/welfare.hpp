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

#ifndef SEQDICT_WELFARE_HPP_
#define SEQDICT_WELFARE_HPP_

#include <optional>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/oracle.hpp"
#include "seqdict/value.hpp"

namespace seqdict {

// SW(S) = sum_i v_i(S^i). Exactly n oracle calls. Throws on a non-full seq.
Value social_welfare(ValuationOracle& oracle, const ActionSeq& seq);

struct OptimalSequence {
  ActionSeq sequence;
  Value welfare;
};

// Exhaustive search over all n! sequences; the lexicographically smallest
// maximizer wins. Prefix values are shared across sequences through a DFS, so
// each (agent, prefix) pair is queried once.
OptimalSequence brute_force_optimal_sequence(ValuationOracle& oracle,
                                             const EnumerationCaps& caps = {});

// A pair S' <= S with v_i(S') < v_i(S). S' is always S with one agent removed.
struct MonotonicityViolation {
  AgentId agent;
  ActionSeq smaller;
  ActionSeq larger;
  Value smaller_value;
  Value larger_value;
};

// Scans agents in ascending order and subsequences by length, then
// lexicographically. Single deletions suffice: every S' <= S is reached from S
// by a chain of them.
std::optional<MonotonicityViolation> find_monotonicity_violation(
    ValuationOracle& oracle, const EnumerationCaps& caps = {});

bool check_monotone_exhaustive(ValuationOracle& oracle, const EnumerationCaps& caps = {});

}  // namespace seqdict

#endif  // SEQDICT_WELFARE_HPP_
