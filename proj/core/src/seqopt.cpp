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

#include "seqdict/seqopt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "seqdict/combinatorics.hpp"
#include "seqdict/welfare.hpp"

namespace seqdict {

namespace {

void require_c(std::size_t c, std::size_t n, bool allow_zero) {
  if ((c == 0 && !allow_zero) || c > n) {
    throw std::invalid_argument("c must satisfy " + std::string(allow_zero ? "0" : "1") +
                                " <= c <= n");
  }
}

Value prefix_welfare(ValuationOracle& oracle, const ActionSeq& order) {
  Value total = 0;
  ActionSeq prefix;
  for (AgentId a : order) {
    total += oracle.query(a, prefix);
    prefix.push_back(a);
  }
  return total;
}

}  // namespace

ActionSeq best_prefix_ordering(ValuationOracle& oracle, const std::vector<AgentId>& subset) {
  std::vector<AgentId> perm = subset;
  std::sort(perm.begin(), perm.end());
  // next_permutation visits orderings lexicographically, so strict > keeps the
  // smallest maximizer.
  std::optional<ActionSeq> best;
  Value best_value;
  do {
    ActionSeq candidate(perm);
    Value value = prefix_welfare(oracle, candidate);
    if (!best || value > best_value) {
      best = std::move(candidate);
      best_value = value;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

ActionSeq complete_ascending(const ActionSeq& prefix, std::size_t n) {
  ActionSeq out = prefix;
  for (AgentId a = 0; a < n; ++a) {
    if (!prefix.contains(a)) out.push_back(a);
  }
  return out;
}

ActionSeq det(ValuationOracle& oracle, std::size_t c) {
  const std::size_t n = oracle.n();
  require_c(c, n, false);
  std::optional<ActionSeq> best;
  Value best_value;
  for_each_combination(n, c, [&](const std::vector<std::size_t>& comb) {
    std::vector<AgentId> perm(comb.begin(), comb.end());
    do {
      ActionSeq candidate(perm);
      Value value = prefix_welfare(oracle, candidate);
      // Combinations are not visited in sequence order, so compare explicitly.
      if (!best || value > best_value || (value == best_value && candidate < *best)) {
        best = std::move(candidate);
        best_value = value;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return complete_ascending(*best, n);
}

std::vector<AgentId> draw_uniform_subset(std::size_t n, std::size_t c, Rng& rng) {
  if (c > n) throw std::invalid_argument("subset larger than population");
  std::vector<AgentId> pool(n);
  std::iota(pool.begin(), pool.end(), AgentId{0});
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(rng.below(n - k));
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(c);
  std::sort(pool.begin(), pool.end());
  return pool;
}

ActionSeq rand_with_subset(ValuationOracle& oracle, const std::vector<AgentId>& subset) {
  return complete_ascending(best_prefix_ordering(oracle, subset), oracle.n());
}

ActionSeq rand(ValuationOracle& oracle, std::size_t c, std::uint64_t seed) {
  require_c(c, oracle.n(), false);
  Rng rng(seed);
  return rand_with_subset(oracle, draw_uniform_subset(oracle.n(), c, rng));
}

ActionSeq det_plus(ValuationOracle& oracle, std::size_t c, const EnumerationCaps& caps) {
  const std::size_t n = oracle.n();
  require_c(c, n, true);
  if (caps.permutation < 21 && falling_factorial(n, c) > factorial(caps.permutation)) {
    throw CapExceeded("det-plus candidates n!/(n-c)! for n=" + std::to_string(n) +
                      ", c=" + std::to_string(c));
  }
  std::optional<ActionSeq> best;
  Value best_value;
  ActionSeq prefix;
  // Ordered c-prefixes in lexicographic order give candidates in
  // lexicographic order, so strict > keeps the smallest maximizer.
  std::function<void()> dfs = [&]() {
    if (prefix.size() == c) {
      ActionSeq candidate = complete_ascending(prefix, n);
      Value value = social_welfare(oracle, candidate);
      if (!best || value > best_value) {
        best = std::move(candidate);
        best_value = value;
      }
      return;
    }
    for (AgentId a = 0; a < n; ++a) {
      if (prefix.contains(a)) continue;
      prefix.push_back(a);
      dfs();
      prefix.pop_back();
    }
  };
  dfs();
  return *best;
}

void LowerBoundInstance::validate() const {
  if (c < 1 || c > n) throw std::invalid_argument("lower-bound instance needs 1 <= c <= n");
  if (!hidden_pi.is_full(n)) throw std::invalid_argument("hidden_pi must be a permutation of [n]");
}

ValuationOracle make_lower_bound_oracle(const LowerBoundInstance& inst) {
  inst.validate();
  auto fn = [c = inst.c, pi = inst.hidden_pi](AgentId, const ActionSeq& s) -> Value {
    return (s.size() < c || is_subsequence(s, pi)) ? Value(1) : Value(0);
  };
  return ValuationOracle(inst.n, fn, true);
}

LowerBoundInstance random_lower_bound_instance(std::size_t n, std::size_t c, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<AgentId> pi = draw_uniform_subset(n, n, rng);
  // draw_uniform_subset sorts, so shuffle separately.
  for (std::size_t k = n; k > 1; --k) {
    std::swap(pi[k - 1], pi[static_cast<std::size_t>(rng.below(k))]);
  }
  LowerBoundInstance inst{n, c, ActionSeq(std::move(pi))};
  inst.validate();
  return inst;
}

void GeneralInstance::validate() const {
  if (n < 1) throw std::invalid_argument("general instance needs n >= 1");
  if (denominator < 1) throw std::invalid_argument("denominator must be positive");
}

namespace {

class GeneralValuation {
 public:
  explicit GeneralValuation(const GeneralInstance& inst) : inst_(inst) {}

  Value operator()(AgentId agent, const ActionSeq& s) {
    std::lock_guard<std::mutex> lock(mu_);
    return value(agent, s);
  }

 private:
  Value base(AgentId agent, const ActionSeq& s) const {
    std::uint64_t h = derive_seed({inst_.seed, agent, s.size()});
    for (AgentId a : s) h = mix64(h ^ (a + 1));
    const std::uint64_t k = h % (inst_.denominator + 1);
    Value v(static_cast<unsigned long>(k), static_cast<unsigned long>(inst_.denominator));
    v.canonicalize();
    return v;
  }

  Value value(AgentId agent, const ActionSeq& s) {
    auto key = std::make_pair(agent, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Value v = base(agent, s);
    for (AgentId j : s) {
      Value sub = value(agent, s.without(j));
      if (sub < v) v = sub;
    }
    memo_.emplace(std::move(key), v);
    return v;
  }

  GeneralInstance inst_;
  std::mutex mu_;
  std::map<std::pair<AgentId, ActionSeq>, Value> memo_;
};

}  // namespace

ValuationOracle make_general_oracle(const GeneralInstance& inst) {
  inst.validate();
  auto state = std::make_shared<GeneralValuation>(inst);
  return ValuationOracle(
      inst.n, [state](AgentId agent, const ActionSeq& s) { return (*state)(agent, s); }, true);
}

}  // namespace seqdict
