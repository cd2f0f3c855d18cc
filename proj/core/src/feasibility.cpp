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

#include "seqdict/feasibility.hpp"

#include <stdexcept>

namespace seqdict {

bool CollectionOfActions::full() const {
  for (const auto& a : actions_) {
    if (!a) return false;
  }
  return true;
}

std::size_t CollectionOfActions::size() const {
  std::size_t count = 0;
  for (const auto& a : actions_) count += a.has_value();
  return count;
}

std::optional<ActionSeq> sequence_for_collection(const FeasibilityContext& ctx,
                                                 const CollectionOfActions& target) {
  if (!target.full()) throw std::invalid_argument("target collection is not full");
  if (!ctx.feasible(target)) throw std::invalid_argument("target collection is not feasible");
  const std::size_t n = target.n();
  CollectionOfActions committed(n);
  std::vector<bool> pending(n, true);
  ActionSeq pi;
  for (std::size_t round = 0; round < n; ++round) {
    std::optional<AgentId> top;
    for (AgentId i = 0; i < n && !top; ++i) {
      if (pending[i] && ctx.best_response(i, committed) == *target.action_of(i)) top = i;
    }
    if (!top) return std::nullopt;
    pending[*top] = false;
    committed.assign(*top, *target.action_of(*top));
    pi.push_back(*top);
  }
  return pi;
}

CollectionOfActions produce_collection(const FeasibilityContext& ctx, std::size_t n,
                                       const ActionSeq& seq) {
  CollectionOfActions m(n);
  for (AgentId agent : seq) m.assign(agent, ctx.best_response(agent, m));
  return m;
}

bool is_downward_closed_on(const FeasibilityContext& ctx, const CollectionOfActions& target,
                           const EnumerationCaps& caps) {
  const std::size_t n = target.n();
  require_within_cap(n, caps.subset, "subset enumeration");
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    CollectionOfActions sub(n);
    for (AgentId i = 0; i < n; ++i) {
      if ((mask >> i & 1) && target.has(i)) sub.assign(i, *target.action_of(i));
    }
    if (!ctx.feasible(sub)) return false;
  }
  return true;
}

}  // namespace seqdict
