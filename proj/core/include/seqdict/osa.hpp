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

#ifndef SEQDICT_OSA_HPP_
#define SEQDICT_OSA_HPP_

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

// Agents are the nodes of a complete digraph; each draws one out-edge. An
// edge is forbidden when it would close a cycle. Diagonal weights are unused
// and stored as 0.
class ArborescenceInstance {
 public:
  // preferences[i] lists the n-1 targets j != i from best to worst.
  ArborescenceInstance(std::vector<std::vector<Value>> weights,
                       std::vector<std::vector<std::size_t>> preferences);
  // Ranks follow the weights, equal weights favoring the lower target index.
  static ArborescenceInstance from_weights(std::vector<std::vector<Value>> weights);

  std::size_t n() const { return weights_.size(); }
  const Value& weight(AgentId from, AgentId to) const { return weights_[from][to]; }
  const std::vector<std::vector<Value>>& weights() const { return weights_; }
  const std::vector<std::vector<std::size_t>>& preferences() const { return preferences_; }
  // 0 is the best rank; drawing no edge ranks n-1, below every edge.
  std::size_t rank(AgentId from, std::optional<AgentId> to) const;

  friend bool operator==(const ArborescenceInstance& a, const ArborescenceInstance& b) {
    return a.weights_ == b.weights_ && a.preferences_ == b.preferences_;
  }

 private:
  std::vector<std::vector<Value>> weights_;
  std::vector<std::vector<std::size_t>> preferences_;
  std::vector<std::vector<std::size_t>> ranks_;
};

// parent[i] is the head of i's out-edge; the root has none.
struct Arborescence {
  std::vector<std::optional<AgentId>> parent;

  // Exactly one root, no self-loops, no cycles.
  bool is_valid() const;
  friend bool operator==(const Arborescence&, const Arborescence&) = default;
};

// True iff `to` reaches `from` along the out-edges in parent, i.e. from -> to
// would close a cycle.
bool closes_cycle(const std::vector<std::optional<AgentId>>& parent, AgentId from, AgentId to);

ValuationOracle osa_oracle(const ArborescenceInstance& inst);

// Keeps a prefix of agents who all obtain v_i(empty); an agent that would
// close a cycle triggers eviction of the cheapest agent on that cycle to a
// reserve list appended at the end. O(n^2) queries.
ActionSeq greedy_osa(ValuationOracle& oracle);

// Ascending on heads, descending on tails. No queries.
ActionSeq bit(std::size_t n, bool heads);

Arborescence arborescence_from_sequence(const ArborescenceInstance& inst, const ActionSeq& seq);
Value arborescence_weight(const ArborescenceInstance& inst, const Arborescence& t);

void for_each_arborescence(std::size_t n, const EnumerationCaps& caps,
                           const std::function<void(const Arborescence&)>& visit);
bool is_pareto_optimal_arborescence(const ArborescenceInstance& inst, const Arborescence& t,
                                    const EnumerationCaps& caps = {});

FeasibilityContext arborescence_context(const ArborescenceInstance& inst);
CollectionOfActions arborescence_to_collection(const Arborescence& t);
std::optional<ActionSeq> sequence_for_arborescence(const ArborescenceInstance& inst,
                                                   const Arborescence& t);

Value max_weight_arborescence(const ArborescenceInstance& inst, const EnumerationCaps& caps = {});

ArborescenceInstance random_digraph_instance(std::size_t n, std::uint64_t seed,
                                             std::uint64_t weight_denominator = 10);

}  // namespace seqdict

#endif  // SEQDICT_OSA_HPP_
