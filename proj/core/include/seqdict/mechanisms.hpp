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

#ifndef SEQDICT_MECHANISMS_HPP_
#define SEQDICT_MECHANISMS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/oracle.hpp"
#include "seqdict/osa.hpp"
#include "seqdict/osm.hpp"
#include "seqdict/value.hpp"

namespace seqdict {

// One agent's valuation as an explicit table over every ordered subset of the
// other agents.
class ValuationTable {
 public:
  ValuationTable(std::size_t n, AgentId agent, std::map<std::vector<AgentId>, Value> values);

  // Reads v_agent off an oracle for every ordered subset (not ledger-neutral).
  static ValuationTable tabulate(ValuationOracle& oracle, AgentId agent,
                                 const EnumerationCaps& caps = {});
  static ValuationTable from_function(std::size_t n, AgentId agent,
                                      const std::function<Value(const ActionSeq&)>& fn,
                                      const EnumerationCaps& caps = {});
  static ValuationTable constant(std::size_t n, AgentId agent, const Value& value,
                                 const EnumerationCaps& caps = {});

  std::size_t n() const { return n_; }
  AgentId agent() const { return agent_; }
  // Throws std::out_of_range for a sequence outside the table.
  const Value& value(const ActionSeq& s) const;
  const std::map<std::vector<AgentId>, Value>& entries() const { return values_; }

  friend bool operator==(const ValuationTable&, const ValuationTable&) = default;

 private:
  std::size_t n_;
  AgentId agent_;
  std::map<std::vector<AgentId>, Value> values_;
};

class ValuationProfile {
 public:
  explicit ValuationProfile(std::vector<ValuationTable> tables);
  static ValuationProfile tabulate(ValuationOracle& oracle, const EnumerationCaps& caps = {});

  std::size_t n() const { return tables_.size(); }
  const ValuationTable& table(AgentId i) const { return tables_.at(i); }
  const Value& value(AgentId i, const ActionSeq& s) const { return tables_.at(i).value(s); }

  // (v_{-i}, alt) and (v_{-i}, 0).
  ValuationProfile with(AgentId i, ValuationTable alt) const;
  ValuationProfile with_zero(AgentId i) const;

  ValuationOracle oracle() const;

 private:
  std::vector<ValuationTable> tables_;
};

struct MechanismOutcome {
  ActionSeq sequence;
  std::vector<Value> payments;
};

// v_i at its prefix in seq minus its payment.
Value utility(const ValuationTable& truth, const MechanismOutcome& outcome);

// Rand with VCG payments over the drawn set C. Agents outside C pay 0.
MechanismOutcome vcg_rand(const ValuationProfile& profile, std::size_t c, std::uint64_t seed);
MechanismOutcome vcg_rand_for_subset(const ValuationProfile& profile,
                                     const std::vector<AgentId>& subset);
// Det+ with VCG payments over all agents.
MechanismOutcome vcg_det_plus(const ValuationProfile& profile, std::size_t c,
                              const EnumerationCaps& caps = {});

using Algorithm = std::function<ActionSeq(ValuationOracle&)>;

// True iff v_i(M(v)) + v'_i(M(v')) < v_i(M(v')) + v'_i(M(v)) where v' replaces
// agent i's valuation with alt. Such a pair rules out any truthful payments.
bool cycle_mon_violation(const Algorithm& alg, const ValuationProfile& v, const ValuationTable& alt);

struct CycleMonTerms {
  Value truthful;     // v_i(M(v)) + v'_i(M(v'))
  Value swapped;      // v_i(M(v')) + v'_i(M(v))
  ActionSeq outcome;  // M(v)
  ActionSeq deviated; // M(v')
};
CycleMonTerms cycle_mon_terms(const Algorithm& alg, const ValuationProfile& v, const ValuationTable& alt);

// The two-agent matching and four-agent arborescence witnesses. With
// deviated set, agent 0's weights are replaced by its misreport.
MatchingInstance osm_counterexample(const Value& eps, bool deviated = false);
ArborescenceInstance osa_counterexample(const Value& eps, bool deviated = false);

struct Counterexample {
  std::string name;
  Algorithm algorithm;
  ValuationProfile profile;
  ValuationTable alternative;  // for agent alternative.agent()
};

// The matching, arborescence and Det witnesses, with agent 0 deviating. The
// Det family uses n agents, C = {0, ..., c-1}.
std::vector<Counterexample> counterexample_profiles(const Value& eps, std::size_t n = 5,
                                                    std::size_t c = 2);

struct WeightedOutcome {
  Value probability;
  MechanismOutcome outcome;
};
using Mechanism = std::function<std::vector<WeightedOutcome>(const ValuationProfile&)>;

// Rand+VCG as an exact distribution over all C(n,c) draws.
Mechanism vcg_rand_mechanism(std::size_t c);
Mechanism vcg_det_plus_mechanism(std::size_t c, const EnumerationCaps& caps = {});
// Heads and tails with probability 1/2 each, no payments.
Mechanism bit_mechanism();
Mechanism without_payments(Algorithm alg);

Value expected_utility(const std::vector<WeightedOutcome>& outcomes, const ValuationTable& truth);

struct TruthViolation {
  AgentId agent;
  std::size_t misreport;
  Value truthful_utility;
  Value deviating_utility;
};

struct TruthfulnessReport {
  std::size_t checked = 0;
  std::vector<TruthViolation> violations;
};

// misreports[i] lists alternative tables for agent i; each must belong to i.
TruthfulnessReport truthfulness_spotcheck(const Mechanism& mechanism, const ValuationProfile& profile,
                                          const std::vector<std::vector<ValuationTable>>& misreports);

}  // namespace seqdict

#endif  // SEQDICT_MECHANISMS_HPP_
