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

#ifndef SEQDICT_OSS_HPP_
#define SEQDICT_OSS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/oracle.hpp"
#include "seqdict/value.hpp"

namespace seqdict {

// Literal encoding: +(v+1) is x_v, -(v+1) is its negation.
using Literal = int;

inline Literal positive(std::size_t var) { return static_cast<Literal>(var + 1); }
inline Literal negative(std::size_t var) { return -static_cast<Literal>(var + 1); }
inline std::size_t variable_of(Literal lit) { return static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1; }

struct Clause {
  std::vector<Literal> literals;  // sorted, no duplicates
  Value weight;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Agent i controls variable x_i and sets it to satisfy the larger weight of
// still-unsatisfied clauses; tie_default[i] decides equal weights.
struct SatInstance {
  std::size_t n = 0;
  std::vector<Clause> clauses;
  std::vector<bool> tie_default;

  // Builds a validated instance; literals are normalized (sorted, deduplicated)
  // and tie_default defaults to all True.
  static SatInstance make(std::size_t n, std::vector<Clause> clauses,
                          std::optional<std::vector<bool>> tie_default = std::nullopt);
  // Throws std::invalid_argument on negative weights, out-of-range variables,
  // complementary literal pairs or a wrong tie_default length.
  void validate() const;
  Value total_weight() const;

  friend bool operator==(const SatInstance&, const SatInstance&) = default;
};

using Assignment = std::vector<bool>;

// Recomputes the simulation of S for every query. Not monotone in general.
ValuationOracle oss_oracle(const SatInstance& inst);

Assignment assignment_from_sequence(const SatInstance& inst, const ActionSeq& seq);
Value satisfied_weight(const SatInstance& inst, const Assignment& a);
// Exhaustive MAX-SAT over 2^n assignments.
Value max_sat_weight(const SatInstance& inst, const EnumerationCaps& caps = {});

// Lexicographically smallest sequence producing target, or nullopt. Once the
// acting agents are all forced to their target values the remaining state
// depends only on which agents have acted, so dead ends are memoized per
// subset and the search is bounded by 2^n states.
std::optional<ActionSeq> sat_as_decide(const SatInstance& inst, const Assignment& target,
                                       const EnumerationCaps& caps = {});

// Exact 3-cover to Sat-AS. Variables are the 3q elements, then the t sets,
// then Q. An element that no set covers would get clause weight -1/3; its
// clause is emitted with weight 0 instead, and every tie resolves to False so
// that such an element can never be set to True.
SatInstance x3c_reduce(std::size_t universe_size,
                       const std::vector<std::array<std::size_t, 3>>& sets);

// Three variables, three mixed clauses of weight 1 and three unit clauses of
// weight 1 - eps. Requires 0 < eps < 1.
SatInstance posd_sat_instance(const Value& eps);

// Three variables on which v_2 (0-based) is not monotone.
SatInstance oss_nonmonotone_instance();

// Clause lengths uniform in [1, min(max_clause_len, n)], distinct variables,
// random signs, weights k/weight_denominator with k uniform in [0, denominator].
SatInstance random_sat_instance(std::size_t n, std::size_t m, std::size_t max_clause_len,
                                std::uint64_t seed, std::uint64_t weight_denominator = 10);

}  // namespace seqdict

#endif  // SEQDICT_OSS_HPP_
