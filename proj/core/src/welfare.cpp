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

#include "seqdict/welfare.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace seqdict {

Value social_welfare(ValuationOracle& oracle, const ActionSeq& seq) {
  if (!seq.is_full(oracle.n())) throw std::invalid_argument("social welfare needs a full sequence");
  Value total = 0;
  ActionSeq prefix;
  for (AgentId agent : seq) {
    total += oracle.query(agent, prefix);
    prefix.push_back(agent);
  }
  return total;
}

OptimalSequence brute_force_optimal_sequence(ValuationOracle& oracle, const EnumerationCaps& caps) {
  const std::size_t n = oracle.n();
  require_within_cap(n, caps.permutation, "permutation enumeration");
  std::optional<OptimalSequence> best;
  std::vector<bool> used(n, false);
  ActionSeq prefix;
  std::function<void(const Value&)> dfs = [&](const Value& acc) {
    if (prefix.size() == n) {
      if (!best || acc > best->welfare) best = OptimalSequence{prefix, acc};
      return;
    }
    for (AgentId a = 0; a < n; ++a) {
      if (used[a]) continue;
      Value next = acc + oracle.query(a, prefix);
      used[a] = true;
      prefix.push_back(a);
      dfs(next);
      prefix.pop_back();
      used[a] = false;
    }
  };
  dfs(Value(0));
  return *best;
}

std::optional<MonotonicityViolation> find_monotonicity_violation(ValuationOracle& oracle,
                                                                 const EnumerationCaps& caps) {
  const std::size_t n = oracle.n();
  require_within_cap(n, caps.monotone, "monotonicity enumeration");
  for (AgentId agent = 0; agent < n; ++agent) {
    // Values of every ordered subset of the other agents, grouped by length.
    std::map<ActionSeq, Value> memo;
    std::vector<std::vector<ActionSeq>> by_length(n);
    by_length[0].push_back(ActionSeq{});
    memo[ActionSeq{}] = oracle.query(agent, ActionSeq{});
    for (std::size_t len = 1; len < n; ++len) {
      for (const ActionSeq& shorter : by_length[len - 1]) {
        for (AgentId a = 0; a < n; ++a) {
          if (a == agent || shorter.contains(a)) continue;
          ActionSeq s = shorter;
          s.push_back(a);
          memo[s] = oracle.query(agent, s);
          by_length[len].push_back(std::move(s));
        }
      }
      std::sort(by_length[len].begin(), by_length[len].end());
      for (const ActionSeq& s : by_length[len]) {
        const Value& big = memo.at(s);
        for (AgentId j : s) {
          ActionSeq smaller = s.without(j);
          const Value& small = memo.at(smaller);
          if (small < big) return MonotonicityViolation{agent, smaller, s, small, big};
        }
      }
    }
  }
  return std::nullopt;
}

bool check_monotone_exhaustive(ValuationOracle& oracle, const EnumerationCaps& caps) {
  return !find_monotonicity_violation(oracle, caps).has_value();
}

}  // namespace seqdict
