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

#include "seqdict/osi.hpp"

#include <functional>
#include <stdexcept>

#include "seqdict/random.hpp"
#include "seqdict/seqopt.hpp"

namespace seqdict {

void OsiInstance::validate() const {
  const std::size_t n = adjacency.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n) throw std::invalid_argument("adjacency must be n x n");
    if (adjacency[i][i]) throw std::invalid_argument("graph must have no self-loops");
    for (std::size_t j = 0; j < i; ++j) {
      if (adjacency[i][j] != adjacency[j][i]) throw std::invalid_argument("adjacency must be symmetric");
    }
  }
}

ValuationOracle osi_oracle(const OsiInstance& inst) {
  inst.validate();
  auto fn = [inst](AgentId agent, const ActionSeq& s) -> Value {
    for (auto a = s.begin(); a != s.end(); ++a) {
      if (inst.adjacency[agent][*a]) return Value(0);
      for (auto b = s.begin(); b != a; ++b) {
        if (inst.adjacency[*a][*b]) return Value(0);
      }
    }
    return Value(1);
  };
  return ValuationOracle(inst.n(), fn, true);
}

std::vector<AgentId> maximum_independent_set(const std::vector<std::vector<bool>>& adjacency,
                                             const EnumerationCaps& caps) {
  const std::size_t n = adjacency.size();
  require_within_cap(n, caps.subset, "independent set enumeration");
  std::vector<AgentId> best;
  std::vector<AgentId> current;
  // Including a vertex is tried before excluding it, so the first largest set
  // found is the lexicographically smallest one.
  std::function<void(AgentId)> branch = [&](AgentId v) {
    if (current.size() + (n - v) <= best.size()) return;
    if (v == n) {
      best = current;
      return;
    }
    bool free = true;
    for (AgentId u : current) free = free && !adjacency[v][u];
    if (free) {
      current.push_back(v);
      branch(v + 1);
      current.pop_back();
    }
    branch(v + 1);
  };
  branch(0);
  return best;
}

ActionSeq osi_learn_and_solve(ValuationOracle& oracle, const EnumerationCaps& caps) {
  const std::size_t n = oracle.n();
  std::vector<std::vector<bool>> adjacency(n, std::vector<bool>(n, false));
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i != j && oracle.query(i, ActionSeq{j}) == 0) adjacency[i][j] = true;
    }
  }
  return complete_ascending(ActionSeq(maximum_independent_set(adjacency, caps)), n);
}

OsiInstance random_osi_instance(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  OsiInstance inst{std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool edge = rng.coin();
      inst.adjacency[i][j] = edge;
      inst.adjacency[j][i] = edge;
    }
  }
  return inst;
}

}  // namespace seqdict
