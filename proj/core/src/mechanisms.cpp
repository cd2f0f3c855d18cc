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

#include "seqdict/mechanisms.hpp"

#include <stdexcept>

#include "seqdict/combinatorics.hpp"
#include "seqdict/osa.hpp"
#include "seqdict/osm.hpp"
#include "seqdict/random.hpp"
#include "seqdict/seqopt.hpp"

namespace seqdict {

namespace {

void for_each_ordered_subset(std::size_t n, AgentId excluded, const EnumerationCaps& caps,
                             const std::function<void(const ActionSeq&)>& visit) {
  require_within_cap(n, caps.monotone, "valuation table enumeration");
  ActionSeq s;
  std::function<void()> grow = [&]() {
    visit(s);
    for (AgentId a = 0; a < n; ++a) {
      if (a == excluded || s.contains(a)) continue;
      s.push_back(a);
      grow();
      s.pop_back();
    }
  };
  grow();
}

Value prefix_value(const ValuationProfile& profile, AgentId k, const ActionSeq& seq) {
  return profile.value(k, prefix_of(seq, k));
}

}  // namespace

ValuationTable::ValuationTable(std::size_t n, AgentId agent, std::map<std::vector<AgentId>, Value> values)
    : n_(n), agent_(agent), values_(std::move(values)) {
  if (agent >= n) throw std::invalid_argument("table agent out of range");
}

ValuationTable ValuationTable::tabulate(ValuationOracle& oracle, AgentId agent, const EnumerationCaps& caps) {
  return from_function(
      oracle.n(), agent, [&](const ActionSeq& s) { return oracle.query(agent, s); }, caps);
}

ValuationTable ValuationTable::from_function(std::size_t n, AgentId agent,
                                             const std::function<Value(const ActionSeq&)>& fn,
                                             const EnumerationCaps& caps) {
  std::map<std::vector<AgentId>, Value> values;
  for_each_ordered_subset(n, agent, caps, [&](const ActionSeq& s) { values.emplace(s.agents(), fn(s)); });
  return ValuationTable(n, agent, std::move(values));
}

ValuationTable ValuationTable::constant(std::size_t n, AgentId agent, const Value& value,
                                        const EnumerationCaps& caps) {
  return from_function(n, agent, [&](const ActionSeq&) { return value; }, caps);
}

const Value& ValuationTable::value(const ActionSeq& s) const {
  auto it = values_.find(s.agents());
  if (it == values_.end()) throw std::out_of_range("sequence " + s.to_string() + " not in valuation table");
  return it->second;
}

ValuationProfile::ValuationProfile(std::vector<ValuationTable> tables) : tables_(std::move(tables)) {
  for (AgentId i = 0; i < tables_.size(); ++i) {
    if (tables_[i].agent() != i || tables_[i].n() != tables_.size()) {
      throw std::invalid_argument("profile table " + std::to_string(i) + " belongs elsewhere");
    }
  }
}

ValuationProfile ValuationProfile::tabulate(ValuationOracle& oracle, const EnumerationCaps& caps) {
  std::vector<ValuationTable> tables;
  for (AgentId i = 0; i < oracle.n(); ++i) tables.push_back(ValuationTable::tabulate(oracle, i, caps));
  return ValuationProfile(std::move(tables));
}

ValuationProfile ValuationProfile::with(AgentId i, ValuationTable alt) const {
  std::vector<ValuationTable> tables = tables_;
  tables.at(i) = std::move(alt);
  return ValuationProfile(std::move(tables));
}

ValuationProfile ValuationProfile::with_zero(AgentId i) const {
  std::map<std::vector<AgentId>, Value> zeros;
  for (const auto& [key, value] : tables_.at(i).entries()) zeros.emplace(key, Value(0));
  return with(i, ValuationTable(n(), i, std::move(zeros)));
}

ValuationOracle ValuationProfile::oracle() const {
  auto tables = std::make_shared<const std::vector<ValuationTable>>(tables_);
  return ValuationOracle(
      n(), [tables](AgentId agent, const ActionSeq& s) { return (*tables)[agent].value(s); }, false);
}

Value utility(const ValuationTable& truth, const MechanismOutcome& outcome) {
  const AgentId i = truth.agent();
  Value u = truth.value(prefix_of(outcome.sequence, i)) - outcome.payments.at(i);
  return u;
}

MechanismOutcome vcg_rand_for_subset(const ValuationProfile& profile, const std::vector<AgentId>& subset) {
  ValuationOracle oracle = profile.oracle();
  MechanismOutcome out{rand_with_subset(oracle, subset), std::vector<Value>(profile.n(), Value(0))};
  for (AgentId i : subset) {
    ValuationOracle zeroed = profile.with_zero(i).oracle();
    const ActionSeq without_i = rand_with_subset(zeroed, subset);
    Value p = 0;
    for (AgentId k : subset) {
      if (k == i) continue;
      p += prefix_value(profile, k, without_i);
      p -= prefix_value(profile, k, out.sequence);
    }
    out.payments[i] = p;
  }
  return out;
}

MechanismOutcome vcg_rand(const ValuationProfile& profile, std::size_t c, std::uint64_t seed) {
  if (c < 1 || c > profile.n()) throw std::invalid_argument("c must satisfy 1 <= c <= n");
  Rng rng(seed);
  return vcg_rand_for_subset(profile, draw_uniform_subset(profile.n(), c, rng));
}

MechanismOutcome vcg_det_plus(const ValuationProfile& profile, std::size_t c, const EnumerationCaps& caps) {
  ValuationOracle oracle = profile.oracle();
  MechanismOutcome out{det_plus(oracle, c, caps), std::vector<Value>(profile.n(), Value(0))};
  for (AgentId i = 0; i < profile.n(); ++i) {
    ValuationOracle zeroed = profile.with_zero(i).oracle();
    const ActionSeq without_i = det_plus(zeroed, c, caps);
    Value p = 0;
    for (AgentId k = 0; k < profile.n(); ++k) {
      if (k == i) continue;
      p += prefix_value(profile, k, without_i);
      p -= prefix_value(profile, k, out.sequence);
    }
    out.payments[i] = p;
  }
  return out;
}

CycleMonTerms cycle_mon_terms(const Algorithm& alg, const ValuationProfile& v, const ValuationTable& alt) {
  const AgentId i = alt.agent();
  ValuationOracle truthful_oracle = v.oracle();
  ValuationOracle deviated_oracle = v.with(i, alt).oracle();
  CycleMonTerms terms;
  terms.outcome = alg(truthful_oracle);
  terms.deviated = alg(deviated_oracle);
  const ActionSeq before_truth = prefix_of(terms.outcome, i);
  const ActionSeq before_dev = prefix_of(terms.deviated, i);
  terms.truthful = v.value(i, before_truth) + alt.value(before_dev);
  terms.swapped = v.value(i, before_dev) + alt.value(before_truth);
  return terms;
}

bool cycle_mon_violation(const Algorithm& alg, const ValuationProfile& v, const ValuationTable& alt) {
  const CycleMonTerms terms = cycle_mon_terms(alg, v, alt);
  return terms.truthful < terms.swapped;
}

MatchingInstance osm_counterexample(const Value& eps, bool deviated) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Value one(1);
  if (deviated) return MatchingInstance::from_weights({{one - eps, Value(0)}, {one, one - eps}});
  return MatchingInstance::from_weights({{one + eps, one}, {one, one - eps}});
}

ArborescenceInstance osa_counterexample(const Value& eps, bool deviated) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Value one(1);
  std::vector<std::vector<Value>> w(4, std::vector<Value>(4, Value(0)));
  w[0][1] = deviated ? Value(one + eps) : Value(one - eps);
  w[0][3] = deviated ? one : eps;
  w[1][0] = one;
  w[2][3] = one - eps;
  w[3][2] = one;
  return ArborescenceInstance::from_weights(std::move(w));
}

std::vector<Counterexample> counterexample_profiles(const Value& eps, std::size_t n, std::size_t c) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (c < 1 || c >= n) throw std::invalid_argument("Det witness needs 1 <= c < n");
  std::vector<Counterexample> out;
  {
    ValuationOracle truth = osm_oracle(osm_counterexample(eps));
    ValuationOracle lie = osm_oracle(osm_counterexample(eps, true));
    out.push_back({"osm", [](ValuationOracle& o) { return greedy_osm(o); },
                   ValuationProfile::tabulate(truth), ValuationTable::tabulate(lie, 0)});
  }
  {
    ValuationOracle truth = osa_oracle(osa_counterexample(eps));
    ValuationOracle lie = osa_oracle(osa_counterexample(eps, true));
    out.push_back({"osa", [](ValuationOracle& o) { return greedy_osa(o); },
                   ValuationProfile::tabulate(truth), ValuationTable::tabulate(lie, 0)});
  }
  {
    std::vector<ValuationTable> tables;
    for (AgentId i = 0; i < n; ++i) {
      if (i < c) {
        tables.push_back(ValuationTable::from_function(
            n, i, [c](const ActionSeq& s) { return s.size() < c ? Value(10) : Value(8); }));
      } else {
        tables.push_back(ValuationTable::constant(n, i, Value(9)));
      }
    }
    auto lie = ValuationTable::from_function(n, 0, [c](const ActionSeq& s) {
      return s.size() < c ? Value(8) : Value(0);
    });
    out.push_back({"det", [c](ValuationOracle& o) { return det(o, c); }, ValuationProfile(std::move(tables)),
                   std::move(lie)});
  }
  return out;
}

Mechanism vcg_rand_mechanism(std::size_t c) {
  return [c](const ValuationProfile& profile) {
    const std::size_t n = profile.n();
    if (c < 1 || c > n) throw std::invalid_argument("c must satisfy 1 <= c <= n");
    const Value p(1, static_cast<unsigned long>(binomial(n, c)));
    std::vector<WeightedOutcome> out;
    for_each_combination(n, c, [&](const std::vector<std::size_t>& comb) {
      out.push_back({p, vcg_rand_for_subset(profile, std::vector<AgentId>(comb.begin(), comb.end()))});
    });
    return out;
  };
}

Mechanism vcg_det_plus_mechanism(std::size_t c, const EnumerationCaps& caps) {
  return [c, caps](const ValuationProfile& profile) {
    return std::vector<WeightedOutcome>{{Value(1), vcg_det_plus(profile, c, caps)}};
  };
}

Mechanism bit_mechanism() {
  return [](const ValuationProfile& profile) {
    const std::vector<Value> zeros(profile.n(), Value(0));
    const Value half(1, 2);
    return std::vector<WeightedOutcome>{{half, {bit(profile.n(), true), zeros}},
                                        {half, {bit(profile.n(), false), zeros}}};
  };
}

Mechanism without_payments(Algorithm alg) {
  return [alg = std::move(alg)](const ValuationProfile& profile) {
    ValuationOracle oracle = profile.oracle();
    return std::vector<WeightedOutcome>{{Value(1), {alg(oracle), std::vector<Value>(profile.n(), Value(0))}}};
  };
}

Value expected_utility(const std::vector<WeightedOutcome>& outcomes, const ValuationTable& truth) {
  Value total = 0;
  for (const WeightedOutcome& o : outcomes) total += o.probability * utility(truth, o.outcome);
  return total;
}

TruthfulnessReport truthfulness_spotcheck(const Mechanism& mechanism, const ValuationProfile& profile,
                                          const std::vector<std::vector<ValuationTable>>& misreports) {
  TruthfulnessReport report;
  const auto truthful_outcomes = mechanism(profile);
  for (AgentId i = 0; i < misreports.size() && i < profile.n(); ++i) {
    const Value honest = expected_utility(truthful_outcomes, profile.table(i));
    for (std::size_t k = 0; k < misreports[i].size(); ++k) {
      if (misreports[i][k].agent() != i) throw std::invalid_argument("misreport belongs to another agent");
      const Value deviating = expected_utility(mechanism(profile.with(i, misreports[i][k])), profile.table(i));
      ++report.checked;
      if (deviating > honest) report.violations.push_back({i, k, honest, deviating});
    }
  }
  return report;
}

}  // namespace seqdict
