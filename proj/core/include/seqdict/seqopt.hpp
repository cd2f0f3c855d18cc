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

#ifndef SEQDICT_SEQOPT_HPP_
#define SEQDICT_SEQOPT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/oracle.hpp"
#include "seqdict/random.hpp"

namespace seqdict {

// Best ordering of every c-subset, then the remaining agents ascending.
// Issues exactly C(n,c) * c * c! queries. Throws std::invalid_argument unless
// 1 <= c <= n.
ActionSeq det(ValuationOracle& oracle, std::size_t c);

// Same as det on one c-subset drawn uniformly at random. Exactly c * c! queries.
ActionSeq rand(ValuationOracle& oracle, std::size_t c, std::uint64_t seed);

// Among all sequences whose last n-c agents are ascending, one of maximum
// welfare. c may be 0. Throws CapExceeded when n!/(n-c)! exceeds the
// permutation cap's factorial.
ActionSeq det_plus(ValuationOracle& oracle, std::size_t c, const EnumerationCaps& caps = {});

// Building blocks shared with the mechanisms module.

// Uniform c-subset of [0, n) via a partial Fisher-Yates shuffle, sorted.
std::vector<AgentId> draw_uniform_subset(std::size_t n, std::size_t c, Rng& rng);
// Ordering of `subset` maximizing sum_{i in subset} v_i(S^i); ties go to the
// lexicographically smallest ordering. |subset| * |subset|! queries.
ActionSeq best_prefix_ordering(ValuationOracle& oracle, const std::vector<AgentId>& subset);
// prefix followed by every other agent of [0, n) in ascending order.
ActionSeq complete_ascending(const ActionSeq& prefix, std::size_t n);
// rand with the subset already chosen.
ActionSeq rand_with_subset(ValuationOracle& oracle, const std::vector<AgentId>& subset);

// Instance of the lower-bound family: v_i(S) = 1 if |S| < c or S <= hidden_pi.
struct LowerBoundInstance {
  std::size_t n = 0;
  std::size_t c = 1;
  ActionSeq hidden_pi;

  void validate() const;
  friend bool operator==(const LowerBoundInstance&, const LowerBoundInstance&) = default;
};

ValuationOracle make_lower_bound_oracle(const LowerBoundInstance& inst);
LowerBoundInstance random_lower_bound_instance(std::size_t n, std::size_t c, std::uint64_t seed);

// Seeded random monotone valuations for instances with no combinatorial
// structure: v_i(S) = min(b_i(S), min_j v_i(S \ j)) where b_i(S) is a hashed
// draw k/denominator, k uniform in [0, denominator].
struct GeneralInstance {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t denominator = 10;

  void validate() const;
  friend bool operator==(const GeneralInstance&, const GeneralInstance&) = default;
};

ValuationOracle make_general_oracle(const GeneralInstance& inst);

}  // namespace seqdict

#endif  // SEQDICT_SEQOPT_HPP_
