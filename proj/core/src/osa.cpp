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

#include "seqdict/osa.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqdict/random.hpp"

namespace seqdict {

namespace {

void check_square(const std::vector<std::vector<Value>>& weights) {
  if (weights.empty()) throw std::invalid_argument("arborescence instance needs n >= 1");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != weights.size()) throw std::invalid_argument("weight matrix must be n x n");
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (i != j && weights[i][j] < 0) throw std::invalid_argument("weights must be non-negative");
    }
  }
}

std::optional<AgentId> best_edge(const ArborescenceInstance& inst, AgentId agent,
                                 const std::vector<std::optional<AgentId>>& parent) {
  for (AgentId to : inst.preferences()[agent]) {
    if (!closes_cycle(parent, agent, to)) return to;
  }
  return std::nullopt;
}

std::vector<std::optional<AgentId>> simulate(const ArborescenceInstance& inst, const ActionSeq& s) {
  std::vector<std::optional<AgentId>> parent(inst.n());
  for (AgentId a : s) parent[a] = best_edge(inst, a, parent);
  return parent;
}

}  // namespace

ArborescenceInstance::ArborescenceInstance(std::vector<std::vector<Value>> weights,
                                           std::vector<std::vector<std::size_t>> preferences)
    : weights_(std::move(weights)), preferences_(std::move(preferences)) {
  check_square(weights_);
  const std::size_t n = weights_.size();
  for (std::size_t i = 0; i < n; ++i) weights_[i][i] = 0;
  if (preferences_.size() != n) throw std::invalid_argument("one preference list per agent");
  ranks_.assign(n, std::vector<std::size_t>(n, n));
  for (AgentId i = 0; i < n; ++i) {
    if (preferences_[i].size() != n - 1) {
      throw std::invalid_argument("preference list must rank the n-1 out-edges");
    }
    for (std::size_t pos = 0; pos + 1 < n; ++pos) {
      const std::size_t to = preferences_[i][pos];
      if (to >= n || to == i || ranks_[i][to] != n) {
        throw std::invalid_argument("preference list must be a permutation of the other nodes");
      }
      ranks_[i][to] = pos;
      if (pos > 0 && weights_[i][preferences_[i][pos - 1]] < weights_[i][to]) {
        throw std::invalid_argument("ranks contradict weights");
      }
    }
  }
}

ArborescenceInstance ArborescenceInstance::from_weights(std::vector<std::vector<Value>> weights) {
  check_square(weights);
  const std::size_t n = weights.size();
  std::vector<std::vector<std::size_t>> prefs(n);
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (j != i) prefs[i].push_back(j);
    }
    std::stable_sort(prefs[i].begin(), prefs[i].end(),
                     [&](std::size_t a, std::size_t b) { return weights[i][a] > weights[i][b]; });
  }
  return ArborescenceInstance(std::move(weights), std::move(prefs));
}

std::size_t ArborescenceInstance::rank(AgentId from, std::optional<AgentId> to) const {
  if (!to) return n() - 1;
  return ranks_[from][*to];
}

bool Arborescence::is_valid() const {
  const std::size_t n = parent.size();
  std::size_t roots = 0;
  for (AgentId i = 0; i < n; ++i) {
    if (!parent[i]) {
      ++roots;
      continue;
    }
    if (*parent[i] >= n || *parent[i] == i) return false;
  }
  if (roots != 1) return false;
  // With one root and n-1 edges, acyclic means every walk ends at the root.
  for (AgentId i = 0; i < n; ++i) {
    AgentId cur = i;
    std::size_t steps = 0;
    while (parent[cur]) {
      cur = *parent[cur];
      if (++steps > n) return false;
    }
  }
  return true;
}

bool closes_cycle(const std::vector<std::optional<AgentId>>& parent, AgentId from, AgentId to) {
  AgentId cur = to;
  for (std::size_t steps = 0; steps <= parent.size(); ++steps) {
    if (cur == from) return true;
    if (!parent[cur]) return false;
    cur = *parent[cur];
  }
  return false;
}

ValuationOracle osa_oracle(const ArborescenceInstance& inst) {
  auto fn = [inst](AgentId agent, const ActionSeq& s) -> Value {
    const auto edge = best_edge(inst, agent, simulate(inst, s));
    return edge ? inst.weight(agent, *edge) : Value(0);
  };
  return ValuationOracle(inst.n(), fn, true);
}

ActionSeq greedy_osa(ValuationOracle& oracle) {
  const std::size_t n = oracle.n();
  std::vector<Value> alone(n);
  ActionSeq pi;
  ActionSeq reserve;
  for (AgentId i = 0; i < n; ++i) {
    alone[i] = oracle.query(i, ActionSeq{});
    const Value current = pi.empty() ? alone[i] : oracle.query(i, pi);
    if (current == alone[i]) {
      pi.push_back(i);
      continue;
    }
    std::vector<AgentId> cycle{i};
    for (AgentId j : pi) {
      if (oracle.query(i, pi.without(j)) == alone[i]) cycle.push_back(j);
    }
    AgentId evicted = cycle.front();
    for (AgentId t : cycle) {
      if (alone[t] < alone[evicted] || (alone[t] == alone[evicted] && t < evicted)) evicted = t;
    }
    pi.push_back(i);
    pi = pi.without(evicted);
    reserve.push_back(evicted);
  }
  return pi.concat(reserve);
}

ActionSeq bit(std::size_t n, bool heads) {
  return heads ? ActionSeq::ascending(n) : ActionSeq::descending(n);
}

Arborescence arborescence_from_sequence(const ArborescenceInstance& inst, const ActionSeq& seq) {
  if (!seq.is_full(inst.n())) throw std::invalid_argument("arborescence needs a full sequence");
  return Arborescence{simulate(inst, seq)};
}

Value arborescence_weight(const ArborescenceInstance& inst, const Arborescence& t) {
  Value total = 0;
  for (AgentId i = 0; i < inst.n(); ++i) {
    if (t.parent[i]) total += inst.weight(i, *t.parent[i]);
  }
  return total;
}

void for_each_arborescence(std::size_t n, const EnumerationCaps& caps,
                           const std::function<void(const Arborescence&)>& visit) {
  require_within_cap(n, caps.tree, "arborescence enumeration");
  Arborescence t{std::vector<std::optional<AgentId>>(n)};
  // Assign parents node by node, pruning as soon as a cycle appears.
  std::function<void(AgentId, bool)> assign = [&](AgentId node, bool has_root) {
    if (node == n) {
      if (has_root) visit(t);
      return;
    }
    if (!has_root) {
      t.parent[node].reset();
      assign(node + 1, true);
    }
    for (AgentId to = 0; to < n; ++to) {
      if (to == node || closes_cycle(t.parent, node, to)) continue;
      t.parent[node] = to;
      assign(node + 1, has_root);
    }
    t.parent[node].reset();
  };
  assign(0, false);
}

bool is_pareto_optimal_arborescence(const ArborescenceInstance& inst, const Arborescence& t,
                                    const EnumerationCaps& caps) {
  const std::size_t n = inst.n();
  if (t.parent.size() != n || !t.is_valid()) throw std::invalid_argument("not an arborescence");
  bool dominated = false;
  for_each_arborescence(n, caps, [&](const Arborescence& other) {
    if (dominated) return;
    bool strict = false;
    for (AgentId i = 0; i < n; ++i) {
      const std::size_t r_other = inst.rank(i, other.parent[i]);
      const std::size_t r_t = inst.rank(i, t.parent[i]);
      if (r_other > r_t) return;
      strict = strict || r_other < r_t;
    }
    dominated = strict;
  });
  return !dominated;
}

FeasibilityContext arborescence_context(const ArborescenceInstance& inst) {
  auto edges_of = [](const CollectionOfActions& m) {
    std::vector<std::optional<AgentId>> parent(m.n());
    for (AgentId i = 0; i < m.n(); ++i) {
      if (m.has(i) && *m.action_of(i) != kNoAction) parent[i] = *m.action_of(i);
    }
    return parent;
  };
  FeasibilityContext ctx;
  ctx.feasible = [](const CollectionOfActions& m) {
    const std::size_t n = m.n();
    std::vector<std::optional<AgentId>> parent(n);
    for (AgentId i = 0; i < n; ++i) {
      if (!m.has(i) || *m.action_of(i) == kNoAction) continue;
      const AgentId to = *m.action_of(i);
      if (to >= n || to == i || closes_cycle(parent, i, to)) return false;
      parent[i] = to;
    }
    return true;
  };
  ctx.best_response = [inst, edges_of](AgentId agent, const CollectionOfActions& m) -> ActionToken {
    const auto edge = best_edge(inst, agent, edges_of(m));
    return edge ? *edge : kNoAction;
  };
  return ctx;
}

CollectionOfActions arborescence_to_collection(const Arborescence& t) {
  CollectionOfActions c(t.parent.size());
  for (AgentId i = 0; i < t.parent.size(); ++i) c.assign(i, t.parent[i] ? *t.parent[i] : kNoAction);
  return c;
}

std::optional<ActionSeq> sequence_for_arborescence(const ArborescenceInstance& inst,
                                                   const Arborescence& t) {
  if (t.parent.size() != inst.n() || !t.is_valid()) throw std::invalid_argument("not an arborescence");
  return sequence_for_collection(arborescence_context(inst), arborescence_to_collection(t));
}

Value max_weight_arborescence(const ArborescenceInstance& inst, const EnumerationCaps& caps) {
  Value best = -1;
  for_each_arborescence(inst.n(), caps, [&](const Arborescence& t) {
    Value w = arborescence_weight(inst, t);
    if (w > best) best = w;
  });
  return best;
}

ArborescenceInstance random_digraph_instance(std::size_t n, std::uint64_t seed,
                                             std::uint64_t weight_denominator) {
  if (n < 1) throw std::invalid_argument("arborescence instance needs n >= 1");
  if (weight_denominator < 1) throw std::invalid_argument("weight denominator must be positive");
  Rng rng(seed);
  std::vector<std::vector<Value>> w(n, std::vector<Value>(n));
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      w[i][j] = Value(static_cast<unsigned long>(rng.below(weight_denominator + 1)),
                      static_cast<unsigned long>(weight_denominator));
      w[i][j].canonicalize();
    }
  }
  return ArborescenceInstance::from_weights(std::move(w));
}

}  // namespace seqdict
