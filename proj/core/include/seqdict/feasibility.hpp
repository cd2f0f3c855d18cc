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

#ifndef SEQDICT_FEASIBILITY_HPP_
#define SEQDICT_FEASIBILITY_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"

namespace seqdict {

// Structure-specific encoding of an action (an item, an edge target, ...).
using ActionToken = std::size_t;
// The action of an agent left with nothing to pick, e.g. the arborescence root.
inline constexpr ActionToken kNoAction = std::numeric_limits<ActionToken>::max();

// At most one action per agent.
class CollectionOfActions {
 public:
  explicit CollectionOfActions(std::size_t n) : actions_(n) {}

  std::size_t n() const { return actions_.size(); }
  const std::optional<ActionToken>& action_of(AgentId agent) const { return actions_.at(agent); }
  void assign(AgentId agent, ActionToken action) { actions_.at(agent) = action; }
  void clear(AgentId agent) { actions_.at(agent).reset(); }
  bool has(AgentId agent) const { return actions_.at(agent).has_value(); }
  bool full() const;
  std::size_t size() const;

  friend bool operator==(const CollectionOfActions&, const CollectionOfActions&) = default;

 private:
  std::vector<std::optional<ActionToken>> actions_;
};

struct FeasibilityContext {
  // Must be downward closed.
  std::function<bool(const CollectionOfActions&)> feasible;
  // Deterministic best action of an agent given the collection so far.
  std::function<ActionToken(AgentId, const CollectionOfActions&)> best_response;
};

// Greedy decision procedure: repeatedly commit the smallest-index agent whose
// target action is its best response to the committed actions. Returns nullopt
// (Fail) when no agent qualifies. Throws std::invalid_argument when target is
// not full or not feasible.
std::optional<ActionSeq> sequence_for_collection(const FeasibilityContext& ctx,
                                                 const CollectionOfActions& target);

// The collection produced by letting the agents of seq best-respond in turn.
CollectionOfActions produce_collection(const FeasibilityContext& ctx, std::size_t n,
                                       const ActionSeq& seq);

// Checks ctx.feasible on every sub-collection of target (2^n of them).
bool is_downward_closed_on(const FeasibilityContext& ctx, const CollectionOfActions& target,
                           const EnumerationCaps& caps = {});

}  // namespace seqdict

#endif  // SEQDICT_FEASIBILITY_HPP_
