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

#include "seqdict/oss.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "seqdict/random.hpp"

namespace seqdict {

namespace {

// Incremental simulation state: which clauses are satisfied so far.
class SatSimulation {
 public:
  explicit SatSimulation(const SatInstance& inst) : inst_(inst), satisfied_(inst.clauses.size(), false) {}

  // P and N over the still-unsatisfied clauses.
  std::pair<Value, Value> weights_for(std::size_t var) const {
    Value p = 0;
    Value neg = 0;
    for (std::size_t c = 0; c < inst_.clauses.size(); ++c) {
      if (satisfied_[c]) continue;
      for (Literal lit : inst_.clauses[c].literals) {
        if (lit == positive(var)) p += inst_.clauses[c].weight;
        if (lit == negative(var)) neg += inst_.clauses[c].weight;
      }
    }
    return {p, neg};
  }

  bool choice_of(std::size_t var) const {
    const auto [p, neg] = weights_for(var);
    if (p != neg) return p > neg;
    return inst_.tie_default[var];
  }

  void set(std::size_t var, bool value) {
    const Literal made_true = value ? positive(var) : negative(var);
    for (std::size_t c = 0; c < inst_.clauses.size(); ++c) {
      const auto& lits = inst_.clauses[c].literals;
      if (std::find(lits.begin(), lits.end(), made_true) != lits.end()) satisfied_[c] = true;
    }
  }

  bool act(std::size_t var) {
    const bool value = choice_of(var);
    set(var, value);
    return value;
  }

  const std::vector<bool>& satisfied() const { return satisfied_; }
  void restore(std::vector<bool> satisfied) { satisfied_ = std::move(satisfied); }

 private:
  const SatInstance& inst_;
  std::vector<bool> satisfied_;
};

}  // namespace

SatInstance SatInstance::make(std::size_t n, std::vector<Clause> clauses,
                              std::optional<std::vector<bool>> tie_default) {
  for (Clause& c : clauses) {
    std::sort(c.literals.begin(), c.literals.end());
    c.literals.erase(std::unique(c.literals.begin(), c.literals.end()), c.literals.end());
  }
  SatInstance inst{n, std::move(clauses), tie_default ? std::move(*tie_default) : std::vector<bool>(n, true)};
  inst.validate();
  return inst;
}

void SatInstance::validate() const {
  if (tie_default.size() != n) throw std::invalid_argument("tie_default needs one entry per variable");
  for (const Clause& c : clauses) {
    if (c.weight < 0) throw std::invalid_argument("clause weights must be non-negative");
    for (std::size_t k = 0; k < c.literals.size(); ++k) {
      const Literal lit = c.literals[k];
      if (lit == 0 || variable_of(lit) >= n) throw std::invalid_argument("literal out of range");
      if (k > 0 && c.literals[k - 1] >= lit) throw std::invalid_argument("clause literals must be sorted and distinct");
      if (std::find(c.literals.begin(), c.literals.end(), -lit) != c.literals.end()) {
        throw std::invalid_argument("clause contains a literal and its negation");
      }
    }
  }
}

Value SatInstance::total_weight() const {
  Value total = 0;
  for (const Clause& c : clauses) total += c.weight;
  return total;
}

ValuationOracle oss_oracle(const SatInstance& inst) {
  inst.validate();
  auto fn = [inst](AgentId agent, const ActionSeq& s) -> Value {
    SatSimulation sim(inst);
    for (AgentId a : s) sim.act(a);
    const auto [p, neg] = sim.weights_for(agent);
    return p > neg ? p : neg;
  };
  return ValuationOracle(inst.n, fn, false);
}

Assignment assignment_from_sequence(const SatInstance& inst, const ActionSeq& seq) {
  if (!seq.is_full(inst.n)) throw std::invalid_argument("assignment needs a full sequence");
  SatSimulation sim(inst);
  Assignment out(inst.n);
  for (AgentId a : seq) out[a] = sim.act(a);
  return out;
}

Value satisfied_weight(const SatInstance& inst, const Assignment& a) {
  if (a.size() != inst.n) throw std::invalid_argument("assignment length mismatch");
  Value total = 0;
  for (const Clause& c : inst.clauses) {
    for (Literal lit : c.literals) {
      if (a[variable_of(lit)] == (lit > 0)) {
        total += c.weight;
        break;
      }
    }
  }
  return total;
}

Value max_sat_weight(const SatInstance& inst, const EnumerationCaps& caps) {
  require_within_cap(inst.n, caps.subset, "assignment enumeration");
  Value best = 0;
  Assignment a(inst.n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n); ++mask) {
    for (std::size_t v = 0; v < inst.n; ++v) a[v] = (mask >> v & 1) != 0;
    Value w = satisfied_weight(inst, a);
    if (w > best) best = w;
  }
  return best;
}

std::optional<ActionSeq> sat_as_decide(const SatInstance& inst, const Assignment& target,
                                       const EnumerationCaps& caps) {
  const std::size_t n = inst.n;
  if (target.size() != n) throw std::invalid_argument("assignment length mismatch");
  require_within_cap(n, caps.subset, "sat-as search states");
  SatSimulation sim(inst);
  std::vector<bool> dead(std::size_t{1} << n, false);
  ActionSeq seq;
  std::function<bool(std::uint64_t)> search = [&](std::uint64_t acted) -> bool {
    if (seq.size() == n) return true;
    if (dead[acted]) return false;
    for (AgentId a = 0; a < n; ++a) {
      if (acted >> a & 1) continue;
      if (sim.choice_of(a) != target[a]) continue;
      std::vector<bool> saved = sim.satisfied();
      sim.set(a, target[a]);
      seq.push_back(a);
      if (search(acted | (std::uint64_t{1} << a))) return true;
      seq.pop_back();
      sim.restore(std::move(saved));
    }
    dead[acted] = true;
    return false;
  };
  if (search(0)) return seq;
  return std::nullopt;
}

SatInstance x3c_reduce(std::size_t universe_size,
                       const std::vector<std::array<std::size_t, 3>>& sets) {
  if (universe_size == 0 || universe_size % 3 != 0) {
    throw std::invalid_argument("universe size must be a positive multiple of 3");
  }
  const std::size_t q = universe_size / 3;
  const std::size_t t = sets.size();
  std::vector<std::size_t> freq(universe_size, 0);
  for (const auto& s : sets) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (s[k] >= universe_size) throw std::invalid_argument("set element out of range");
      for (std::size_t l = 0; l < k; ++l) {
        if (s[l] == s[k]) throw std::invalid_argument("set must have three distinct elements");
      }
      ++freq[s[k]];
    }
  }
  const std::size_t first_set = universe_size;
  const std::size_t q_var = universe_size + t;
  const Value tq(static_cast<long>(t), 1);
  const Value qq(static_cast<long>(q), 1);
  std::vector<Clause> clauses;
  // Type A: every pair of sets.
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      clauses.push_back({{positive(first_set + i), positive(first_set + j)}, Value(1)});
    }
  }
  // Type B: (T or not x) for each member x.
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t x : sets[i]) clauses.push_back({{positive(first_set + i), negative(x)}, Value(1)});
  }
  // Type C: (x or not Q).
  for (std::size_t x = 0; x < universe_size; ++x) {
    Value w = freq[x] == 0 ? Value(0) : Value(Value(static_cast<long>(freq[x]), 1) - make_value(1, 3));
    clauses.push_back({{positive(x), negative(q_var)}, w});
  }
  // Type D: (Q or not T).
  const Value d_weight = tq - qq + make_value(7, 3);
  for (std::size_t i = 0; i < t; ++i) clauses.push_back({{positive(q_var), negative(first_set + i)}, d_weight});
  // Type E: the unit clause not Q.
  const Value e_weight = tq * tq - qq * tq + make_value(7, 3) * tq - make_value(1, 3);
  clauses.push_back({{negative(q_var)}, e_weight});
  return SatInstance::make(universe_size + t + 1, std::move(clauses),
                           std::vector<bool>(universe_size + t + 1, false));
}

SatInstance posd_sat_instance(const Value& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
  const Value unit = 1 - eps;
  return SatInstance::make(3, {
      {{positive(0), negative(1), negative(2)}, Value(1)},
      {{negative(0), positive(1), negative(2)}, Value(1)},
      {{negative(0), negative(1), positive(2)}, Value(1)},
      {{positive(0)}, unit},
      {{positive(1)}, unit},
      {{positive(2)}, unit},
  });
}

SatInstance oss_nonmonotone_instance() {
  return SatInstance::make(3, {
      {{positive(0), positive(1)}, Value(6)},
      {{negative(0), positive(1), positive(2)}, Value(2)},
      {{negative(0), negative(1), positive(2)}, Value(1)},
      {{negative(0), negative(1)}, Value(2)},
  });
}

SatInstance random_sat_instance(std::size_t n, std::size_t m, std::size_t max_clause_len,
                                std::uint64_t seed, std::uint64_t weight_denominator) {
  if (n < 1) throw std::invalid_argument("sat instance needs n >= 1");
  if (max_clause_len < 1) throw std::invalid_argument("clauses need at least one literal");
  if (weight_denominator < 1) throw std::invalid_argument("weight denominator must be positive");
  Rng rng(seed);
  const std::size_t longest = std::min(max_clause_len, n);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  std::vector<std::size_t> vars(n);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng.below(longest));
    for (std::size_t v = 0; v < n; ++v) vars[v] = v;
    Clause c;
    for (std::size_t j = 0; j < len; ++j) {
      std::swap(vars[j], vars[j + static_cast<std::size_t>(rng.below(n - j))]);
      c.literals.push_back(rng.coin() ? positive(vars[j]) : negative(vars[j]));
    }
    c.weight = Value(static_cast<unsigned long>(rng.below(weight_denominator + 1)),
                     static_cast<unsigned long>(weight_denominator));
    c.weight.canonicalize();
    clauses.push_back(std::move(c));
  }
  return SatInstance::make(n, std::move(clauses));
}

}  // namespace seqdict
