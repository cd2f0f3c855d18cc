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

#include "seqdict/osm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "seqdict/random.hpp"

namespace seqdict {

namespace {

void check_square(const std::vector<std::vector<Value>>& weights) {
  if (weights.empty()) throw std::invalid_argument("matching instance needs n >= 1");
  for (const auto& row : weights) {
    if (row.size() != weights.size()) throw std::invalid_argument("weight matrix must be n x n");
    for (const Value& w : row) {
      if (w < 0) throw std::invalid_argument("weights must be non-negative");
    }
  }
}

// The best-ranked item not in `taken`.
std::size_t top_free_item(const MatchingInstance& inst, AgentId agent,
                          const std::vector<bool>& taken) {
  for (std::size_t item : inst.preferences()[agent]) {
    if (!taken[item]) return item;
  }
  throw std::logic_error("no free item left");
}

}  // namespace

MatchingInstance::MatchingInstance(std::vector<std::vector<Value>> weights,
                                   std::vector<std::vector<std::size_t>> preferences)
    : weights_(std::move(weights)), preferences_(std::move(preferences)) {
  check_square(weights_);
  const std::size_t n = weights_.size();
  if (preferences_.size() != n) throw std::invalid_argument("one preference list per agent");
  ranks_.assign(n, std::vector<std::size_t>(n, n));
  for (AgentId i = 0; i < n; ++i) {
    if (preferences_[i].size() != n) throw std::invalid_argument("preference list must rank every item");
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t item = preferences_[i][pos];
      if (item >= n || ranks_[i][item] != n) {
        throw std::invalid_argument("preference list must be a permutation of the items");
      }
      ranks_[i][item] = pos;
      if (pos > 0 && weights_[i][preferences_[i][pos - 1]] < weights_[i][item]) {
        throw std::invalid_argument("ranks contradict weights");
      }
    }
  }
}

MatchingInstance MatchingInstance::from_weights(std::vector<std::vector<Value>> weights) {
  check_square(weights);
  const std::size_t n = weights.size();
  std::vector<std::vector<std::size_t>> prefs(n, std::vector<std::size_t>(n));
  for (AgentId i = 0; i < n; ++i) {
    std::iota(prefs[i].begin(), prefs[i].end(), std::size_t{0});
    std::stable_sort(prefs[i].begin(), prefs[i].end(),
                     [&](std::size_t a, std::size_t b) { return weights[i][a] > weights[i][b]; });
  }
  return MatchingInstance(std::move(weights), std::move(prefs));
}

bool Matching::is_perfect() const {
  std::vector<bool> seen(item_of.size(), false);
  for (std::size_t item : item_of) {
    if (item >= item_of.size() || seen[item]) return false;
    seen[item] = true;
  }
  return true;
}

ValuationOracle osm_oracle(const MatchingInstance& inst) {
  auto fn = [inst](AgentId agent, const ActionSeq& s) -> Value {
    std::vector<bool> taken(inst.n(), false);
    for (AgentId a : s) taken[top_free_item(inst, a, taken)] = true;
    return inst.weight(agent, top_free_item(inst, agent, taken));
  };
  return ValuationOracle(inst.n(), fn, true);
}

ActionSeq greedy_osm(ValuationOracle& oracle) {
  const std::size_t n = oracle.n();
  ActionSeq pi;
  std::vector<bool> remaining(n, true);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<AgentId> best;
    Value best_value;
    for (AgentId i = 0; i < n; ++i) {
      if (!remaining[i]) continue;
      Value v = oracle.query(i, pi);
      if (!best || v > best_value) {
        best = i;
        best_value = v;
      }
    }
    remaining[*best] = false;
    pi.push_back(*best);
  }
  return pi;
}

Matching matching_from_sequence(const MatchingInstance& inst, const ActionSeq& seq) {
  if (!seq.is_full(inst.n())) throw std::invalid_argument("matching needs a full sequence");
  Matching m{std::vector<std::size_t>(inst.n())};
  std::vector<bool> taken(inst.n(), false);
  for (AgentId a : seq) {
    m.item_of[a] = top_free_item(inst, a, taken);
    taken[m.item_of[a]] = true;
  }
  return m;
}

Value matching_weight(const MatchingInstance& inst, const Matching& m) {
  Value total = 0;
  for (AgentId i = 0; i < inst.n(); ++i) total += inst.weight(i, m.item_of[i]);
  return total;
}

void for_each_perfect_matching(std::size_t n, const EnumerationCaps& caps,
                               const std::function<void(const Matching&)>& visit) {
  require_within_cap(n, caps.permutation, "perfect matching enumeration");
  Matching m{std::vector<std::size_t>(n)};
  std::iota(m.item_of.begin(), m.item_of.end(), std::size_t{0});
  do {
    visit(m);
  } while (std::next_permutation(m.item_of.begin(), m.item_of.end()));
}

bool is_pareto_optimal_matching(const MatchingInstance& inst, const Matching& m,
                                const EnumerationCaps& caps) {
  const std::size_t n = inst.n();
  if (m.item_of.size() != n || !m.is_perfect()) throw std::invalid_argument("not a perfect matching");
  bool dominated = false;
  for_each_perfect_matching(n, caps, [&](const Matching& other) {
    if (dominated) return;
    bool strict = false;
    for (AgentId i = 0; i < n; ++i) {
      const std::size_t r_other = inst.rank(i, other.item_of[i]);
      const std::size_t r_m = inst.rank(i, m.item_of[i]);
      if (r_other > r_m) return;
      strict = strict || r_other < r_m;
    }
    dominated = strict;
  });
  return !dominated;
}

FeasibilityContext matching_context(const MatchingInstance& inst) {
  FeasibilityContext ctx;
  ctx.feasible = [n = inst.n()](const CollectionOfActions& m) {
    std::vector<bool> used(n, false);
    for (AgentId i = 0; i < m.n(); ++i) {
      if (!m.has(i)) continue;
      const ActionToken item = *m.action_of(i);
      if (item >= n || used[item]) return false;
      used[item] = true;
    }
    return true;
  };
  ctx.best_response = [inst](AgentId agent, const CollectionOfActions& m) -> ActionToken {
    std::vector<bool> taken(inst.n(), false);
    for (AgentId i = 0; i < m.n(); ++i) {
      if (m.has(i)) taken[*m.action_of(i)] = true;
    }
    return top_free_item(inst, agent, taken);
  };
  return ctx;
}

CollectionOfActions matching_to_collection(const Matching& m) {
  CollectionOfActions c(m.item_of.size());
  for (AgentId i = 0; i < m.item_of.size(); ++i) c.assign(i, m.item_of[i]);
  return c;
}

std::optional<ActionSeq> sequence_for_matching(const MatchingInstance& inst, const Matching& m) {
  return sequence_for_collection(matching_context(inst), matching_to_collection(m));
}

Value max_weight_perfect_matching(const MatchingInstance& inst, const EnumerationCaps& caps) {
  Value best = -1;
  for_each_perfect_matching(inst.n(), caps, [&](const Matching& m) {
    Value w = matching_weight(inst, m);
    if (w > best) best = w;
  });
  return best;
}

MatchingInstance random_matching_instance(std::size_t n, std::uint64_t seed,
                                          std::uint64_t weight_denominator) {
  if (n < 1) throw std::invalid_argument("matching instance needs n >= 1");
  if (weight_denominator < 1) throw std::invalid_argument("weight denominator must be positive");
  Rng rng(seed);
  std::vector<std::vector<Value>> w(n, std::vector<Value>(n));
  for (auto& row : w) {
    for (Value& x : row) {
      x = Value(static_cast<unsigned long>(rng.below(weight_denominator + 1)),
                static_cast<unsigned long>(weight_denominator));
      x.canonicalize();
    }
  }
  return MatchingInstance::from_weights(std::move(w));
}

}  // namespace seqdict
