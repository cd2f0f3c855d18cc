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

#include "seqdict/paths.hpp"

#include <functional>
#include <stdexcept>

#include "seqdict/random.hpp"

namespace seqdict {

namespace {

struct PathState {
  std::vector<std::optional<AgentId>> next;
  std::vector<bool> has_in;

  explicit PathState(std::size_t n) : next(n), has_in(n, false) {}

  bool addable(AgentId from, AgentId to) const {
    if (from == to || next[from] || has_in[to]) return false;
    // Following out-edges from `to` must not come back to `from`.
    AgentId cur = to;
    while (next[cur]) {
      cur = *next[cur];
      if (cur == from) return false;
    }
    return true;
  }

  void add(AgentId from, AgentId to) {
    next[from] = to;
    has_in[to] = true;
  }
};

std::optional<AgentId> best_addable(const PathsInstance& inst, const PathState& state, AgentId agent) {
  std::optional<AgentId> best;
  for (AgentId to = 0; to < inst.n(); ++to) {
    if (!state.addable(agent, to)) continue;
    if (!best || inst.weights[agent][to] > inst.weights[agent][*best]) best = to;
  }
  return best;
}

PathState simulate(const PathsInstance& inst, const ActionSeq& s) {
  PathState state(inst.n());
  for (AgentId a : s) {
    if (auto to = best_addable(inst, state, a)) state.add(a, *to);
  }
  return state;
}

}  // namespace

void PathsInstance::validate() const {
  const std::size_t n = weights.size();
  if (n < 1) throw std::invalid_argument("paths instance needs n >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].size() != n) throw std::invalid_argument("weight matrix must be n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && weights[i][j] < 0) throw std::invalid_argument("weights must be non-negative");
      if (i == j && weights[i][j] != 0) throw std::invalid_argument("diagonal weights must be 0");
    }
  }
}

bool PathUnion::is_valid() const {
  const std::size_t n = next.size();
  std::vector<bool> has_in(n, false);
  for (AgentId i = 0; i < n; ++i) {
    if (!next[i]) continue;
    const AgentId to = *next[i];
    if (to >= n || to == i || has_in[to]) return false;
    has_in[to] = true;
  }
  for (AgentId i = 0; i < n; ++i) {
    AgentId cur = i;
    for (std::size_t steps = 0; next[cur]; ++steps) {
      if (steps >= n) return false;
      cur = *next[cur];
    }
  }
  return true;
}

ValuationOracle paths_oracle(const PathsInstance& inst) {
  inst.validate();
  auto fn = [inst](AgentId agent, const ActionSeq& s) -> Value {
    const PathState state = simulate(inst, s);
    const auto to = best_addable(inst, state, agent);
    return to ? inst.weights[agent][*to] : Value(0);
  };
  return ValuationOracle(inst.n(), fn, false);
}

PathUnion paths_from_sequence(const PathsInstance& inst, const ActionSeq& seq) {
  if (!seq.is_full(inst.n())) throw std::invalid_argument("paths need a full sequence");
  return PathUnion{simulate(inst, seq).next};
}

Value path_union_weight(const PathsInstance& inst, const PathUnion& p) {
  Value total = 0;
  for (AgentId i = 0; i < inst.n(); ++i) {
    if (p.next[i]) total += inst.weights[i][*p.next[i]];
  }
  return total;
}

Value max_path_union_weight(const PathsInstance& inst, const EnumerationCaps& caps) {
  const std::size_t n = inst.n();
  require_within_cap(n, caps.tree, "path union enumeration");
  PathState state(n);
  Value best = 0;
  std::function<void(AgentId, const Value&)> assign = [&](AgentId node, const Value& acc) {
    if (node == n) {
      if (acc > best) best = acc;
      return;
    }
    assign(node + 1, acc);
    for (AgentId to = 0; to < n; ++to) {
      if (!state.addable(node, to)) continue;
      state.add(node, to);
      assign(node + 1, Value(acc + inst.weights[node][to]));
      state.next[node].reset();
      state.has_in[to] = false;
    }
  };
  assign(0, Value(0));
  return best;
}

PathsInstance posd_paths_instance(const Value& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  PathsInstance inst{std::vector<std::vector<Value>>(4, std::vector<Value>(4, Value(0)))};
  const Value heavy = 1 + eps;
  inst.weights[0][1] = 1;
  inst.weights[1][2] = 1;
  inst.weights[2][3] = 1;
  inst.weights[0][3] = heavy;
  inst.weights[1][3] = heavy;
  inst.weights[2][1] = heavy;
  return inst;
}

PathsInstance paths_nonmonotone_instance() {
  std::vector<std::vector<Value>> w(4, std::vector<Value>(4, Value(0)));
  w[0][3] = 1;
  w[1][3] = 1;
  w[1][2] = make_value(1, 2);
  w[3][1] = 1;
  return PathsInstance{std::move(w)};
}

PathsInstance random_paths_instance(std::size_t n, std::uint64_t seed, std::uint64_t weight_denominator) {
  if (n < 1) throw std::invalid_argument("paths instance needs n >= 1");
  if (weight_denominator < 1) throw std::invalid_argument("weight denominator must be positive");
  Rng rng(seed);
  PathsInstance inst{std::vector<std::vector<Value>>(n, std::vector<Value>(n, Value(0)))};
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      inst.weights[i][j] = Value(static_cast<unsigned long>(rng.below(weight_denominator + 1)),
                                 static_cast<unsigned long>(weight_denominator));
      inst.weights[i][j].canonicalize();
    }
  }
  return inst;
}

}  // namespace seqdict
