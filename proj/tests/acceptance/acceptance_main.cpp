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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <unistd.h>

#include "commands.hpp"
#include "instance_file.hpp"
#include "reference.hpp"
#include "seqdict/mechanisms.hpp"
#include "seqdict/posd.hpp"
#include "seqdict/random.hpp"
#include "seqdict/seqopt.hpp"
#include "seqdict/welfare.hpp"

namespace {

using namespace seqdict;
using seqdict::testing::all_permutations;
using seqdict::testing::q;

// Pinned limits and tolerances.
constexpr double kQueryCountSeconds = 10.0;
constexpr double kApproxSeconds = 300.0;
constexpr double kX3cSeconds = 30.0;
constexpr double kStandardErrors = 3.0;
constexpr std::size_t kRandRuns = 2000;
constexpr std::size_t kRandGeneralInstances = 20;
constexpr std::size_t kDetInstances = 200;
constexpr std::size_t kGreedyInstances = 200;
constexpr std::size_t kOssInstances = 50;
constexpr std::size_t kParetoInstances = 50;
constexpr std::size_t kPosdInstances = 100;
constexpr std::size_t kBitInstances = 100;
constexpr std::size_t kMonotoneInstancesPerN = 10;
constexpr std::size_t kRoundTripInstances = 200;
const Value kPosdEps = make_value(1, 10);
const Value kPosdSmallEps = make_value(1, 10000);
const Value kPosdSlack = make_value(1, 1000);

struct Outcome {
  bool passed = true;
  std::vector<std::string> failures;
  std::string summary;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures.size() < 4) failures.push_back(what);
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string str(const Value& v) { return format_rational(v); }
std::string num(std::size_t v) { return std::to_string(v); }

std::uint64_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }
std::uint64_t choose(std::size_t n, std::size_t k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Welfare and optimum computed here from raw oracle queries.
Value welfare_of(ValuationOracle& o, const std::vector<AgentId>& seq) {
  Value total = 0;
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    total += o.query(seq[pos], ActionSeq(std::vector<AgentId>(seq.begin(), seq.begin() + pos)));
  }
  return total;
}

Value optimum_of(ValuationOracle& o) {
  Value best = 0;
  bool first = true;
  for (const auto& p : all_permutations(o.n())) {
    const Value sw = welfare_of(o, p);
    if (first || sw > best) best = sw;
    first = false;
  }
  return best;
}

// ---- 1 ---------------------------------------------------------------------

Outcome criterion_query_counts() {
  Outcome r;
  Timer timer;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t c = 1; c <= n; ++c) {
      ValuationOracle d = make_general_oracle({n, 100 + n * 10 + c, 10});
      det(d, c);
      r.check(d.ledger().total_calls() == choose(n, c) * c * factorial(c),
              "det n=" + num(n) + " c=" + num(c) + " made " + num(d.ledger().total_calls()));
      ValuationOracle rn = make_general_oracle({n, 200 + n * 10 + c, 10});
      rand(rn, c, n * 31 + c);
      r.check(rn.ledger().total_calls() == c * factorial(c),
              "rand n=" + num(n) + " c=" + num(c) + " made " + num(rn.ledger().total_calls()));
    }
    ValuationOracle m = osm_oracle(random_matching_instance(n, n));
    greedy_osm(m);
    r.check(m.ledger().total_calls() == n * (n + 1) / 2, "greedy_osm n=" + num(n));
    ValuationOracle g = osi_oracle(random_osi_instance(n, n));
    osi_learn_and_solve(g);
    r.check(g.ledger().total_calls() == n * (n - 1), "osi_learn_and_solve n=" + num(n));
  }
  const double secs = timer.seconds();
  r.check(secs < kQueryCountSeconds, "runtime " + std::to_string(secs) + "s");
  r.summary = "det, rand for n<=7 and all c; greedy_osm, osi learner for n<=7";
  return r;
}

// ---- 2 ---------------------------------------------------------------------

Outcome criterion_approximation() {
  Outcome r;
  Timer timer;
  std::size_t det_runs = 0;
  for (std::size_t k = 0; k < kDetInstances; ++k) {
    const std::size_t n = 1 + k % 7;
    ValuationOracle o = make_general_oracle({n, derive_seed({2, k}), 10});
    const Value opt = optimum_of(o);
    for (std::size_t c = 1; c <= n; ++c) {
      ValuationOracle run = o;
      const ActionSeq s = det(run, c);
      const Value sw = welfare_of(o, s.agents());
      r.check(Value(static_cast<long>(n)) * sw >= Value(static_cast<long>(c)) * opt,
              "det n=" + num(n) + " c=" + num(c) + " sw=" + str(sw) + " opt=" + str(opt));
      ++det_runs;
    }
  }
  for (std::size_t k = 0; k < kGreedyInstances; ++k) {
    const std::size_t n = 3 + k % 4;
    ValuationOracle m = osm_oracle(random_matching_instance(n, derive_seed({3, k})));
    ValuationOracle mr = m;
    const Value msw = welfare_of(m, greedy_osm(mr).agents());
    r.check(2 * msw >= optimum_of(m), "greedy_osm n=" + num(n) + " k=" + num(k));
    ValuationOracle a = osa_oracle(random_digraph_instance(n, derive_seed({4, k})));
    ValuationOracle ar = a;
    const Value asw = welfare_of(a, greedy_osa(ar).agents());
    r.check(2 * asw >= optimum_of(a), "greedy_osa n=" + num(n) + " k=" + num(k));
  }
  std::size_t oss_sequences = 0;
  for (std::size_t k = 0; k < kOssInstances; ++k) {
    const std::size_t n = 1 + k % 5;
    const SatInstance inst = random_sat_instance(n, 2 + k % 7, 3, derive_seed({5, k}));
    Value total = 0;
    for (const Clause& c : inst.clauses) total += c.weight;
    ValuationOracle o = oss_oracle(inst);
    for (const auto& p : all_permutations(n)) {
      r.check(2 * welfare_of(o, p) >= total, "oss n=" + num(n) + " k=" + num(k));
      ++oss_sequences;
    }
  }
  const double secs = timer.seconds();
  r.check(secs < kApproxSeconds, "runtime " + std::to_string(secs) + "s");
  r.summary = num(det_runs) + " det runs, " + num(2 * kGreedyInstances) + " greedy runs, " + num(oss_sequences) +
              " oss sequences";
  return r;
}

// ---- 3 ---------------------------------------------------------------------

// Mean minus kStandardErrors standard errors of SW over seeded rand runs.
std::pair<double, double> rand_mean_and_se(const ValuationOracle& oracle, std::size_t c, std::uint64_t base) {
  std::vector<double> samples;
  samples.reserve(kRandRuns);
  for (std::size_t run = 0; run < kRandRuns; ++run) {
    ValuationOracle o = oracle;
    const ActionSeq s = rand(o, c, derive_seed({base, run}));
    ValuationOracle eval = oracle;
    samples.push_back(welfare_of(eval, s.agents()).get_d());
  }
  double mean = 0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(samples.size());
  double var = 0;
  for (double x : samples) var += (x - mean) * (x - mean);
  var /= static_cast<double>(samples.size() - 1);
  return {mean, std::sqrt(var / static_cast<double>(samples.size()))};
}

Outcome criterion_rand_expectation() {
  Outcome r;
  const std::size_t n = 5, c = 2;
  const double share = static_cast<double>(c) / static_cast<double>(n);
  std::ostringstream detail;
  {
    const LowerBoundInstance inst = random_lower_bound_instance(n, c, 17);
    ValuationOracle o = make_lower_bound_oracle(inst);
    const double opt = static_cast<double>(n);
    const auto [mean, se] = rand_mean_and_se(o, c, 31);
    r.check(mean >= share * opt - kStandardErrors * se,
            "F_c mean " + std::to_string(mean) + " < " + std::to_string(share * opt));
    detail << "F_c mean " << mean << " vs bound " << share * opt;
  }
  double worst_margin = 1e300;
  for (std::size_t k = 0; k < kRandGeneralInstances; ++k) {
    ValuationOracle o = make_general_oracle({n, derive_seed({6, k}), 10});
    const double opt = optimum_of(o).get_d();
    const auto [mean, se] = rand_mean_and_se(o, c, derive_seed({7, k}));
    const double margin = mean - (share * opt - kStandardErrors * se);
    worst_margin = std::min(worst_margin, margin);
    r.check(margin >= 0, "general k=" + num(k) + " mean " + std::to_string(mean) + " opt " + std::to_string(opt));
  }
  detail << "; " << kRandGeneralInstances << " monotone instances, smallest margin " << worst_margin;
  r.summary = detail.str();
  return r;
}

// ---- 4 ---------------------------------------------------------------------

// Every pair S' <= S of ordered subsets, straight from the definition.
std::optional<std::string> naive_violation(ValuationOracle& o) {
  const std::size_t n = o.n();
  for (AgentId i = 0; i < n; ++i) {
    const auto subsets = seqdict::testing::all_ordered_subsets(n, i);
    for (const auto& big : subsets) {
      const Value vb = o.query(i, ActionSeq(big));
      for (const auto& small : subsets) {
        if (!seqdict::testing::naive_is_subsequence(small, big)) continue;
        const Value vs = o.query(i, ActionSeq(small));
        if (vs < vb) {
          return "v_" + num(i) + ActionSeq(small).to_string() + "=" + str(vs) + " < v_" + num(i) +
                 ActionSeq(big).to_string() + "=" + str(vb);
        }
      }
    }
  }
  return std::nullopt;
}

Outcome criterion_monotonicity() {
  Outcome r;
  std::vector<std::string> lines;
  auto sweep = [&](const std::string& name, const std::function<ValuationOracle(std::size_t, std::uint64_t)>& make) {
    std::size_t violated = 0, checked = 0;
    std::string first;
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 0; k < kMonotoneInstancesPerN; ++k) {
        ValuationOracle o = make(n, derive_seed({8, n, k, name.size()}));
        ++checked;
        if (auto v = naive_violation(o)) {
          if (violated++ == 0) first = *v + " (n=" + num(n) + ")";
        }
      }
    }
    r.check(violated == 0, name + ": " + num(violated) + "/" + num(checked) + " instances not monotone, e.g. " + first);
  };
  sweep("osm", [](std::size_t n, std::uint64_t s) { return osm_oracle(random_matching_instance(n, s)); });
  sweep("osa", [](std::size_t n, std::uint64_t s) { return osa_oracle(random_digraph_instance(n, s)); });
  sweep("osi", [](std::size_t n, std::uint64_t s) { return osi_oracle(random_osi_instance(n, s)); });
  sweep("paths", [](std::size_t n, std::uint64_t s) { return paths_oracle(random_paths_instance(n, s)); });
  sweep("F_c", [](std::size_t n, std::uint64_t s) {
    return make_lower_bound_oracle(random_lower_bound_instance(n, 1 + s % n, s));
  });
  ValuationOracle witness = oss_oracle(oss_nonmonotone_instance());
  const Value big = witness.query(2, ActionSeq{0, 1});
  const Value small = witness.query(2, ActionSeq{1});
  r.check(big == 2 && small == 1, "oss witness values " + str(big) + ", " + str(small));
  r.check(!check_monotone_exhaustive(witness), "oss witness instance reported monotone");
  r.summary = "osm, osa, osi, paths, F_c for n<=5; oss witness v_2(0,1)=" + str(big) + " > v_2(1)=" + str(small);
  return r;
}

// ---- 5 ---------------------------------------------------------------------

bool dominates(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    strict = strict || a[i] < b[i];
  }
  return strict;
}

Outcome criterion_pareto() {
  Outcome r;
  std::size_t matchings = 0, trees = 0, dominated = 0;
  for (std::size_t k = 0; k < kParetoInstances; ++k) {
    const std::size_t n = 1 + k % 4;
    const auto m = random_matching_instance(n, derive_seed({9, k}), 3);
    const auto a = random_digraph_instance(n, derive_seed({10, k}), 3);
    std::vector<Matching> produced;
    std::vector<Arborescence> grown;
    for (const auto& p : all_permutations(n)) {
      produced.push_back(matching_from_sequence(m, ActionSeq(p)));
      grown.push_back(arborescence_from_sequence(a, ActionSeq(p)));
    }
    std::vector<Matching> all_m;
    std::vector<std::vector<std::size_t>> m_ranks;
    for_each_perfect_matching(n, {}, [&](const Matching& mu) {
      all_m.push_back(mu);
      std::vector<std::size_t> ranks;
      for (AgentId i = 0; i < n; ++i) ranks.push_back(m.rank(i, mu.item_of[i]));
      m_ranks.push_back(ranks);
    });
    for (std::size_t x = 0; x < all_m.size(); ++x) {
      bool pareto = true;
      for (std::size_t y = 0; y < all_m.size() && pareto; ++y) pareto = !dominates(m_ranks[y], m_ranks[x]);
      const bool by_seq = std::find(produced.begin(), produced.end(), all_m[x]) != produced.end();
      const bool alg = sequence_for_matching(m, all_m[x]).has_value();
      r.check(by_seq == alg && alg == pareto, "osm k=" + num(k));
      dominated += !pareto;
      ++matchings;
    }
    std::vector<Arborescence> all_t;
    std::vector<std::vector<std::size_t>> t_ranks;
    for_each_arborescence(n, {}, [&](const Arborescence& t) {
      all_t.push_back(t);
      std::vector<std::size_t> ranks;
      for (AgentId i = 0; i < n; ++i) ranks.push_back(a.rank(i, t.parent[i]));
      t_ranks.push_back(ranks);
    });
    for (std::size_t x = 0; x < all_t.size(); ++x) {
      bool pareto = true;
      for (std::size_t y = 0; y < all_t.size() && pareto; ++y) pareto = !dominates(t_ranks[y], t_ranks[x]);
      const bool by_seq = std::find(grown.begin(), grown.end(), all_t[x]) != grown.end();
      const bool alg = sequence_for_arborescence(a, all_t[x]).has_value();
      r.check(by_seq == alg && alg == pareto, "osa k=" + num(k));
      dominated += !pareto;
      ++trees;
    }
  }
  r.summary = num(matchings) + " matchings, " + num(trees) + " arborescences, " + num(dominated) + " dominated";
  return r;
}

// ---- 6 ---------------------------------------------------------------------

Outcome criterion_posd() {
  Outcome r;
  for (std::size_t k = 0; k < kPosdInstances; ++k) {
    const std::size_t n = 1 + k % 5;
    const auto m = random_matching_instance(n, derive_seed({11, k}));
    ValuationOracle mo = osm_oracle(m);
    r.check(max_weight_perfect_matching(m) == optimum_of(mo), "matching PoSD != 1, k=" + num(k));
    const auto a = random_digraph_instance(n, derive_seed({12, k}));
    ValuationOracle ao = osa_oracle(a);
    r.check(max_weight_arborescence(a) == optimum_of(ao), "arborescence PoSD != 1, k=" + num(k));
  }
  auto measure = [](const StructuredInstance& inst) {
    ValuationOracle o = make_oracle(inst);
    const Value opt = underlying_optimum(inst);
    const Value best = optimum_of(o);
    return std::tuple<Value, Value, Value>{opt, best, opt / best};
  };
  std::ostringstream s;
  {
    const auto [opt, best, ratio] = measure(posd_sat_instance(kPosdEps));
    r.check(opt == q("57/10") && best == q("39/10") && ratio == q("19/13"),
            "sat-posd gave " + str(opt) + ", " + str(best) + ", " + str(ratio) + " (want 57/10, 39/10, 19/13)");
    s << "sat-posd " << str(opt) << ", " << str(best) << ", " << str(ratio);
  }
  {
    const auto [opt, best, ratio] = measure(posd_paths_instance(kPosdEps));
    r.check(opt == 3 && best == q("21/10") && ratio == q("10/7"),
            "paths-posd gave " + str(opt) + ", " + str(best) + ", " + str(ratio) + " (want 3/1, 21/10, 10/7)");
    s << "; paths-posd " << str(opt) << ", " << str(best) << ", " << str(ratio);
  }
  const Value threshold = q("3/2") - kPosdSlack;
  const Value sat_small = std::get<2>(measure(posd_sat_instance(kPosdSmallEps)));
  const Value paths_small = std::get<2>(measure(posd_paths_instance(kPosdSmallEps)));
  r.check(sat_small > threshold, "sat-posd ratio at eps=1/10000 is " + format_decimal(sat_small));
  r.check(paths_small > threshold, "paths-posd ratio at eps=1/10000 is " + format_decimal(paths_small));
  s << "; eps=1/10000 ratios " << format_decimal(sat_small) << ", " << format_decimal(paths_small);
  r.summary = s.str();
  return r;
}

// ---- 7 ---------------------------------------------------------------------

Outcome criterion_lower_bound_family() {
  Outcome r;
  std::size_t sequences = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t c = 1; c <= n; ++c) {
      const LowerBoundInstance inst = random_lower_bound_instance(n, c, derive_seed({13, n, c}));
      ValuationOracle o = make_lower_bound_oracle(inst);
      const Value opt = optimum_of(o);
      r.check(opt == static_cast<long>(n), "optimum " + str(opt) + " for n=" + num(n) + " c=" + num(c));
      for (const auto& p : all_permutations(n)) {
        const std::vector<AgentId> prefix(p.begin(), p.begin() + static_cast<long>(c));
        if (seqdict::testing::naive_is_subsequence(prefix, inst.hidden_pi.agents())) continue;
        ++sequences;
        r.check(welfare_of(o, p) == static_cast<long>(c), "n=" + num(n) + " c=" + num(c));
      }
    }
  }
  r.summary = "n<=6, all c; " + num(sequences) + " off-prefix sequences";
  return r;
}

// ---- 8 ---------------------------------------------------------------------

std::size_t count_all_true(const SatInstance& inst) {
  std::size_t hits = 0;
  std::vector<AgentId> perm(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) perm[i] = i;
  const Assignment target(inst.n, true);
  do {
    hits += assignment_from_sequence(inst, ActionSeq(perm)) == target;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hits;
}

Outcome criterion_x3c() {
  Outcome r;
  Timer timer;
  const SatInstance yes = x3c_reduce(3, {{0, 1, 2}});
  const SatInstance no = x3c_reduce(6, {{0, 1, 2}, {1, 2, 3}});
  const std::size_t yes_hits = count_all_true(yes);
  const std::size_t no_hits = count_all_true(no);
  r.check(yes.n == 5 && yes_hits > 0, "yes-instance: " + num(yes_hits) + " of 5! sequences give all-True");
  r.check(no.n == 9 && no_hits == 0, "no-instance: " + num(no_hits) + " of 9! sequences give all-True");
  const double secs = timer.seconds();
  r.check(secs < kX3cSeconds, "runtime " + std::to_string(secs) + "s");
  r.summary = "yes: " + num(yes_hits) + "/120 sequences; no: " + num(no_hits) + "/362880; " +
              std::to_string(secs).substr(0, 5) + "s";
  return r;
}

// ---- 9 ---------------------------------------------------------------------

Outcome criterion_truthfulness() {
  Outcome r;
  for (const Value& eps : {make_value(1, 10), make_value(1, 100)}) {
    for (const Counterexample& c : counterexample_profiles(eps, 4, 2)) {
      r.check(cycle_mon_violation(c.algorithm, c.profile, c.alternative),
              c.name + " inequality holds at eps=" + str(eps));
    }
  }
  std::size_t spot = 0;
  for (const Counterexample& c : counterexample_profiles(make_value(1, 10), 4, 2)) {
    const std::size_t n = c.profile.n();
    std::vector<std::vector<ValuationTable>> lies(n);
    for (AgentId i = 0; i < n; ++i) {
      lies[i].push_back(ValuationTable::constant(n, i, Value(0)));
      lies[i].push_back(ValuationTable::constant(n, i, Value(50)));
      const ValuationTable& truth = c.profile.table(i);
      lies[i].push_back(ValuationTable::from_function(n, i, [&truth](const ActionSeq& s) {
        return Value(truth.value(s) * 3);
      }));
    }
    lies[c.alternative.agent()].push_back(c.alternative);
    const std::size_t cc = std::min<std::size_t>(2, n);
    for (const auto& [label, mech] :
         {std::pair{std::string("vcg_rand"), vcg_rand_mechanism(cc)},
          std::pair{std::string("vcg_det_plus"), vcg_det_plus_mechanism(cc)}}) {
      const TruthfulnessReport rep = truthfulness_spotcheck(mech, c.profile, lies);
      spot += rep.checked;
      r.check(rep.violations.empty(), label + " misreport gains on " + c.name);
      for (const WeightedOutcome& w : mech(c.profile)) {
        for (AgentId i = 0; i < n; ++i) {
          r.check(w.outcome.payments[i] >= 0, label + " negative payment on " + c.name);
          r.check(utility(c.profile.table(i), w.outcome) >= 0, label + " not IR on " + c.name);
        }
      }
    }
  }
  for (std::size_t k = 0; k < kBitInstances; ++k) {
    const std::size_t n = 1 + k % 6;
    ValuationOracle o = osa_oracle(random_digraph_instance(n, derive_seed({14, k})));
    const Value expected = (welfare_of(o, bit(n, true).agents()) + welfare_of(o, bit(n, false).agents())) / 2;
    r.check(2 * expected >= optimum_of(o), "bit below half on OSA n=" + num(n));
  }
  r.summary = "3 witnesses x 2 eps; " + num(spot) + " misreports; " + num(kBitInstances) + " bit instances";
  return r;
}

// ---- 10 --------------------------------------------------------------------

struct Cli {
  int code;
  std::string out;
};

Cli cli(std::vector<std::string> args) {
  args.insert(args.begin(), "seqdict");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/seqdict_acceptance_" + std::to_string(::getpid()) + "_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

Outcome criterion_cli() {
  Outcome r;
  using nlohmann::json;
  auto gen = [&](const std::string& paper) {
    const Cli g = cli({"gen", "--paper", paper, "--eps", "1/10"});
    r.check(g.code == 0, "gen --paper " + paper + " exit " + std::to_string(g.code));
    return write_temp(paper, g.out);
  };
  auto json_of = [&](const std::vector<std::string>& args) {
    const Cli c = cli(args);
    r.check(c.code == 0, args[0] + " exit " + std::to_string(c.code) + ": " + c.out);
    return c.code == 0 ? json::parse(c.out) : json::object();
  };
  auto expect = [&](const json& doc, const std::string& key, const std::string& want, const std::string& what) {
    const std::string got = doc.contains(key) && doc[key].is_string() ? doc[key].get<std::string>() : "?";
    r.check(got == want, what + " " + key + " = " + got + " (want " + want + ")");
  };
  std::vector<std::string> files;

  const std::string sat = gen("sat-posd");
  const json sp = json_of({"posd", sat, "--json"});
  expect(sp, "optimum", "57/10", "sat-posd");
  expect(sp, "best_welfare", "39/10", "sat-posd");
  expect(sp, "ratio", "19/13", "sat-posd");

  const std::string paths = gen("paths-posd");
  const json pp = json_of({"posd", paths, "--json"});
  expect(pp, "optimum", "3/1", "paths-posd");
  expect(pp, "best_welfare", "21/10", "paths-posd");
  expect(pp, "ratio", "10/7", "paths-posd");

  // Ascending sequence (det-plus with c = 0): 6 + 3 + 2.
  const std::string oss = gen("oss-nonmono");
  const json op = json_of({"run", oss, "det-plus", "--c", "0", "--json"});
  expect(op, "welfare", "11/1", "oss-nonmono");

  // The deviating agent's value under truthful reports.
  const std::string osm = gen("osm-counterexample");
  const json mp = json_of({"run", osm, "greedy-osm", "--json"});
  const std::string m0 = mp.contains("values") ? mp["values"][0].get<std::string>() : "?";
  r.check(m0 == "11/10", "osm-counterexample agent 0 value " + m0 + " (want 11/10)");

  const std::string osa = gen("osa-counterexample");
  const json ap = json_of({"run", osa, "greedy-osa", "--json"});
  const std::string a0 = ap.contains("values") ? ap["values"][0].get<std::string>() : "?";
  r.check(a0 == "0/1", "osa-counterexample agent 0 value " + a0 + " (want 0/1)");

  for (const auto& f : {sat, paths, oss, osm, osa}) std::remove(f.c_str());

  std::size_t round_trips = 0;
  for (const std::string& kind : cli::instance_kinds()) {
    for (std::uint64_t seed = 0; seed < kRoundTripInstances; ++seed) {
      cli::GenOptions g;
      g.kind = kind;
      g.n = 1 + seed % 6;
      g.seed = seed;
      g.c = 1 + seed % g.n;
      const cli::AnyInstance inst = cli::generate(g);
      r.check(cli::parse_instance(cli::serialize(inst)) == inst, "round trip " + kind + " seed " + num(seed));
      ++round_trips;
    }
  }
  for (const std::string& suite : cli::verify_suites()) {
    const Cli v = cli({"verify", suite});
    r.check(v.code == 0, "verify " + suite + " exit " + std::to_string(v.code));
  }
  r.summary = "5 named instances, " + num(round_trips) + " round trips, " + num(cli::verify_suites().size()) +
              " verify suites";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"query-count exactness", criterion_query_counts},
      {"approximation guarantees", criterion_approximation},
      {"rand expectation", criterion_rand_expectation},
      {"monotonicity", criterion_monotonicity},
      {"pareto characterization", criterion_pareto},
      {"posd values", criterion_posd},
      {"lower-bound family", criterion_lower_bound_family},
      {"x3c reduction", criterion_x3c},
      {"truthfulness", criterion_truthfulness},
      {"cli", criterion_cli},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Timer timer;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << k + 1 << " " << criteria[k].first << ": " << o.summary;
    for (const auto& f : o.failures) std::cout << " | " << f;
    std::cout << " [" << std::to_string(timer.seconds()).substr(0, 5) << "s]" << std::endl;
  }
  return all ? 0 : 1;
}
