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

#ifndef SEQDICT_OSM_HPP_
#define SEQDICT_OSM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/feasibility.hpp"
#include "seqdict/oracle.hpp"
#include "seqdict/value.hpp"

namespace seqdict {

// Agents pick items of a complete bipartite graph K_{n,n}. Each agent ranks
// the items strictly; weights must not contradict the ranking.
class MatchingInstance {
 public:
  // preferences[i] lists items from best to worst for agent i.
  MatchingInstance(std::vector<std::vector<Value>> weights,
                   std::vector<std::vector<std::size_t>> preferences);
  // Ranks follow the weights, equal weights favoring the lower item index.
  static MatchingInstance from_weights(std::vector<std::vector<Value>> weights);

  std::size_t n() const { return weights_.size(); }
  const Value& weight(AgentId agent, std::size_t item) const { return weights_[agent][item]; }
  const std::vector<std::vector<Value>>& weights() const { return weights_; }
  const std::vector<std::vector<std::size_t>>& preferences() const { return preferences_; }
  // 0 is the best rank.
  std::size_t rank(AgentId agent, std::size_t item) const { return ranks_[agent][item]; }

  friend bool operator==(const MatchingInstance& a, const MatchingInstance& b) {
    return a.weights_ == b.weights_ && a.preferences_ == b.preferences_;
  }

 private:
  std::vector<std::vector<Value>> weights_;
  std::vector<std::vector<std::size_t>> preferences_;
  std::vector<std::vector<std::size_t>> ranks_;
};

struct Matching {
  std::vector<std::size_t> item_of;

  bool is_perfect() const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

ValuationOracle osm_oracle(const MatchingInstance& inst);

// Repeatedly appends the remaining agent with the highest value after the
// current sequence (smallest index on ties). Exactly n(n+1)/2 queries.
ActionSeq greedy_osm(ValuationOracle& oracle);

Matching matching_from_sequence(const MatchingInstance& inst, const ActionSeq& seq);
Value matching_weight(const MatchingInstance& inst, const Matching& m);

// Brute force over all n! perfect matchings, comparing ranks.
bool is_pareto_optimal_matching(const MatchingInstance& inst, const Matching& m,
                                const EnumerationCaps& caps = {});

FeasibilityContext matching_context(const MatchingInstance& inst);
CollectionOfActions matching_to_collection(const Matching& m);
std::optional<ActionSeq> sequence_for_matching(const MatchingInstance& inst, const Matching& m);

// Calls visit on each perfect matching in lexicographic order of item_of.
void for_each_perfect_matching(std::size_t n, const EnumerationCaps& caps,
                               const std::function<void(const Matching&)>& visit);
Value max_weight_perfect_matching(const MatchingInstance& inst, const EnumerationCaps& caps = {});

// Weights k/weight_denominator with k uniform in [0, weight_denominator].
MatchingInstance random_matching_instance(std::size_t n, std::uint64_t seed,
                                          std::uint64_t weight_denominator = 10);

}  // namespace seqdict

#endif  // SEQDICT_OSM_HPP_
