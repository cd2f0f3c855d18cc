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

#include <gtest/gtest.h>

#include "reference.hpp"
#include "seqdict/oss.hpp"
#include "seqdict/wcnf.hpp"
#include "seqdict/welfare.hpp"

namespace seqdict {
namespace {

using testing::q;

std::vector<testing::NaiveClause> naive_clauses(const SatInstance& inst) {
  std::vector<testing::NaiveClause> out;
  for (const auto& c : inst.clauses) out.push_back({c.literals, c.weight});
  return out;
}

TEST(OssTest, LemmaInstanceValues) {
  ValuationOracle o = oss_oracle(oss_nonmonotone_instance());
  EXPECT_EQ(o.query(2, ActionSeq{0, 1}), 2);
  EXPECT_EQ(o.query(2, ActionSeq{1}), 1);
  EXPECT_FALSE(o.monotone_claimed());
}

TEST(OssTest, LemmaInstanceSequence) {
  const SatInstance inst = oss_nonmonotone_instance();
  ValuationOracle o = oss_oracle(inst);
  EXPECT_EQ(social_welfare(o, ActionSeq{0, 1, 2}), 11);
  EXPECT_EQ(assignment_from_sequence(inst, ActionSeq{0, 1, 2}), (Assignment{true, false, true}));
}

TEST(OssTest, LemmaInstanceViolationWitness) {
  ValuationOracle o = oss_oracle(oss_nonmonotone_instance());
  const auto v = find_monotonicity_violation(o);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->agent, 2u);
  EXPECT_EQ(v->smaller, ActionSeq{1});
  EXPECT_EQ(v->larger, (ActionSeq{0, 1}));
  EXPECT_EQ(v->smaller_value, 1);
  EXPECT_EQ(v->larger_value, 2);
  EXPECT_FALSE(check_monotone_exhaustive(o));
}

TEST(OssTest, SingleClause) {
  const SatInstance inst = SatInstance::make(1, {{{positive(0)}, q("3/4")}});
  ValuationOracle o = oss_oracle(inst);
  EXPECT_EQ(o.query(0, ActionSeq{}), q("3/4"));
  EXPECT_EQ(sat_as_decide(inst, {true}), ActionSeq{0});
  EXPECT_FALSE(sat_as_decide(inst, {false}).has_value());
}

TEST(OssTest, Validation) {
  EXPECT_THROW(SatInstance::make(2, {{{positive(0), negative(0)}, Value(1)}}), std::invalid_argument);
  EXPECT_THROW(SatInstance::make(2, {{{positive(2)}, Value(1)}}), std::invalid_argument);
  EXPECT_THROW(SatInstance::make(2, {{{positive(1)}, Value(-1)}}), std::invalid_argument);
  EXPECT_THROW(SatInstance::make(2, {}, std::vector<bool>{true}), std::invalid_argument);
  const SatInstance dup = SatInstance::make(2, {{{positive(1), positive(0), positive(1)}, Value(1)}});
  EXPECT_EQ(dup.clauses[0].literals, (std::vector<Literal>{1, 2}));
  EXPECT_EQ(dup.tie_default, (std::vector<bool>{true, true}));
}

TEST(OssTest, TieDefaultDecidesEqualWeights) {
  const std::vector<Clause> clauses{{{positive(0)}, Value(1)}, {{negative(0)}, Value(1)}};
  EXPECT_EQ(assignment_from_sequence(SatInstance::make(1, clauses), ActionSeq{0}), Assignment{true});
  EXPECT_EQ(assignment_from_sequence(SatInstance::make(1, clauses, std::vector<bool>{false}), ActionSeq{0}),
            Assignment{false});
}

TEST(OssTest, OracleMatchesNaiveSimulation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const SatInstance inst = random_sat_instance(n, 2 + seed % 6, 3, seed, 4);
    ValuationOracle o = oss_oracle(inst);
    const auto clauses = naive_clauses(inst);
    for (AgentId i = 0; i < n; ++i) {
      for (const auto& s : testing::all_ordered_subsets(n, i)) {
        ASSERT_EQ(o.query(i, ActionSeq(s)), testing::naive_oss_value(clauses, true, i, s));
      }
    }
  }
}

TEST(OssTest, PositiveUnitClausesGiveAllTrue) {
  std::vector<Clause> clauses;
  for (std::size_t v = 0; v < 4; ++v) clauses.push_back({{positive(v)}, Value(1)});
  const SatInstance inst = SatInstance::make(4, clauses);
  for (const auto& p : testing::all_permutations(4)) {
    EXPECT_EQ(assignment_from_sequence(inst, ActionSeq(p)), Assignment(4, true));
  }
}

TEST(OssTest, PosdInstance) {
  const Value eps = q("1/10");
  const SatInstance inst = posd_sat_instance(eps);
  EXPECT_EQ(inst.total_weight(), q("57/10"));
  EXPECT_EQ(satisfied_weight(inst, Assignment(3, true)), q("57/10"));
  EXPECT_EQ(max_sat_weight(inst), q("57/10"));
  for (const auto& p : testing::all_permutations(3)) {
    const Assignment a = assignment_from_sequence(inst, ActionSeq(p));
    EXPECT_FALSE(a[p[0]]);
    EXPECT_FALSE(a[p[1]]);
    EXPECT_TRUE(a[p[2]]);
  }
  ValuationOracle o = oss_oracle(inst);
  EXPECT_EQ(brute_force_optimal_sequence(o).welfare, q("39/10"));
  EXPECT_FALSE(sat_as_decide(inst, Assignment(3, true)).has_value());
  EXPECT_THROW(posd_sat_instance(Value(0)), std::invalid_argument);
  EXPECT_THROW(posd_sat_instance(Value(1)), std::invalid_argument);
}

TEST(OssTest, PosdRatioFormula) {
  for (const char* text : {"1/2", "1/10", "1/100", "3/7"}) {
    const Value eps = q(text);
    const SatInstance inst = posd_sat_instance(eps);
    ValuationOracle o = oss_oracle(inst);
    const Value ratio = max_sat_weight(inst) / brute_force_optimal_sequence(o).welfare;
    EXPECT_EQ(ratio, (6 - 3 * eps) / (4 - eps)) << text;
  }
}

TEST(OssTest, EverySequenceIsTwoApproximate) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const SatInstance inst = random_sat_instance(n, 3 + seed % 5, 3, seed + 77, 10);
    ValuationOracle o = oss_oracle(inst);
    for (const auto& p : testing::all_permutations(n)) {
      const ActionSeq s(p);
      const Value sw = social_welfare(o, s);
      EXPECT_GE(2 * sw, inst.total_weight());
      EXPECT_EQ(sw, satisfied_weight(inst, assignment_from_sequence(inst, s)));
    }
  }
}

TEST(OssTest, SatAsDecideFindsWitnesses) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const SatInstance inst = random_sat_instance(n, 4, 3, seed, 3);
    std::optional<ActionSeq> smallest;
    const Assignment target = assignment_from_sequence(inst, ActionSeq::descending(n));
    for (const auto& p : testing::all_permutations(n)) {
      if (assignment_from_sequence(inst, ActionSeq(p)) == target) {
        smallest = ActionSeq(p);
        break;
      }
    }
    const auto found = sat_as_decide(inst, target);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, *smallest);
  }
}

TEST(OssTest, SatAsDecideCap) {
  const SatInstance inst = random_sat_instance(6, 3, 2, 1);
  EnumerationCaps caps;
  caps.subset = 5;
  EXPECT_THROW(sat_as_decide(inst, Assignment(6, true), caps), CapExceeded);
  EXPECT_THROW(sat_as_decide(inst, Assignment(5, true)), std::invalid_argument);
}

std::size_t count_weight(const SatInstance& inst, std::size_t len, const Value& w) {
  std::size_t count = 0;
  for (const auto& c : inst.clauses) count += c.literals.size() == len && c.weight == w;
  return count;
}

TEST(OssTest, X3cYesInstance) {
  const SatInstance inst = x3c_reduce(3, {{0, 1, 2}});
  EXPECT_EQ(inst.n, 5u);
  EXPECT_EQ(inst.clauses.size(), 8u);  // 1/2 + 7/2 + 3 + 1
  // Type E is the only unit clause.
  ASSERT_EQ(inst.clauses.back().literals, std::vector<Literal>{negative(4)});
  EXPECT_EQ(inst.clauses.back().weight, 2);
  EXPECT_EQ(count_weight(inst, 2, q("7/3")), 1u);
  EXPECT_EQ(count_weight(inst, 2, q("2/3")), 3u);
  EXPECT_TRUE(sat_as_decide(inst, Assignment(5, true)).has_value());
}

TEST(OssTest, X3cNoInstance) {
  // Element 5 is uncovered.
  const SatInstance inst = x3c_reduce(6, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(inst.n, 9u);
  EXPECT_EQ(inst.clauses.size(), 2u + 7u + 6u + 1u);
  EXPECT_EQ(inst.clauses.back().weight, q("13/3"));
  EXPECT_FALSE(sat_as_decide(inst, Assignment(9, true)).has_value());
}

TEST(OssTest, X3cClauseCounts) {
  for (std::size_t t = 1; t <= 4; ++t) {
    std::vector<std::array<std::size_t, 3>> sets;
    for (std::size_t k = 0; k < t; ++k) sets.push_back({k % 3, 3 + k % 3, (k + 1) % 3});
    const SatInstance inst = x3c_reduce(6, sets);
    EXPECT_EQ(2 * inst.clauses.size(), t * t + 7 * t + 6 * 2 + 2);
    EXPECT_EQ(inst.n, 6 + t + 1);
  }
}

TEST(OssTest, X3cRejectsMalformedInput) {
  EXPECT_THROW(x3c_reduce(4, {{0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(x3c_reduce(3, {{0, 1, 3}}), std::invalid_argument);
  EXPECT_THROW(x3c_reduce(3, {{0, 1, 1}}), std::invalid_argument);
}

TEST(OssTest, RandomGenerator) {
  EXPECT_EQ(random_sat_instance(4, 6, 3, 9), random_sat_instance(4, 6, 3, 9));
  const SatInstance inst = random_sat_instance(4, 50, 3, 2, 10);
  EXPECT_EQ(inst.clauses.size(), 50u);
  for (const auto& c : inst.clauses) {
    EXPECT_GE(c.literals.size(), 1u);
    EXPECT_LE(c.literals.size(), 3u);
    EXPECT_GE(c.weight, 0);
    EXPECT_LE(c.weight, 1);
  }
  EXPECT_NO_THROW(inst.validate());
}

TEST(WcnfTest, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SatInstance inst = random_sat_instance(1 + seed % 5, seed % 7, 3, seed, 7);
    inst.tie_default[0] = seed % 2 == 0;
    EXPECT_EQ(read_wcnf(write_wcnf(inst)), inst);
  }
  const SatInstance x3c = x3c_reduce(3, {{0, 1, 2}});
  EXPECT_EQ(read_wcnf(write_wcnf(x3c)), x3c);
}

TEST(WcnfTest, ParsesHandWrittenFile) {
  const SatInstance inst = read_wcnf("c a comment\np wcnf 2 2\n1/2 1 -2 0\n3 2 0\n");
  EXPECT_EQ(inst.n, 2u);
  ASSERT_EQ(inst.clauses.size(), 2u);
  EXPECT_EQ(inst.clauses[0].weight, q("1/2"));
  EXPECT_EQ(inst.clauses[0].literals, (std::vector<Literal>{-2, 1}));
  EXPECT_EQ(inst.tie_default, (std::vector<bool>{true, true}));
}

TEST(WcnfTest, RejectsMalformed) {
  EXPECT_THROW(read_wcnf("1 1 0\n"), std::invalid_argument);
  EXPECT_THROW(read_wcnf("p wcnf 1 1\n1 2 0\n"), std::invalid_argument);
  EXPECT_THROW(read_wcnf("p wcnf 1 2\n1 1 0\n"), std::invalid_argument);
  EXPECT_THROW(read_wcnf("p wcnf 1 1\n1 1\n"), std::invalid_argument);
}

}  // namespace
}  // namespace seqdict
