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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "seqdict/mechanisms.hpp"
#include "seqdict/random.hpp"
#include "seqdict/welfare.hpp"

namespace seqdict::cli {

namespace {

using nlohmann::ordered_json;

bool contains(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : "|") + n;
  return out;
}

ordered_json rational(const Value& v) { return format_rational(v); }

ordered_json optional_rational(const std::optional<Value>& v) {
  return v ? ordered_json(format_rational(*v)) : ordered_json(nullptr);
}

bool uses_c(const std::string& algorithm) {
  return algorithm == "det" || algorithm == "rand" || algorithm == "det-plus";
}

template <class T>
const T& require_kind(const AnyInstance& inst, const std::string& algorithm, const char* kind) {
  if (const T* p = std::get_if<T>(&inst)) return *p;
  throw std::invalid_argument(algorithm + " needs an instance of kind " + kind + ", got " + kind_of(inst));
}

ActionSeq run_algorithm(const AnyInstance& inst, ValuationOracle& oracle, const RunOptions& options,
                        const EnumerationCaps& caps) {
  const std::string& alg = options.algorithm;
  if (alg == "det") return det(oracle, options.c);
  if (alg == "rand") return rand(oracle, options.c, options.seed);
  if (alg == "det-plus") return det_plus(oracle, options.c, caps);
  if (alg == "greedy-osm") {
    require_kind<MatchingInstance>(inst, alg, "osm");
    return greedy_osm(oracle);
  }
  if (alg == "greedy-osa") {
    require_kind<ArborescenceInstance>(inst, alg, "osa");
    return greedy_osa(oracle);
  }
  if (alg == "osi-learn") {
    require_kind<OsiInstance>(inst, alg, "osi");
    return osi_learn_and_solve(oracle, caps);
  }
  if (alg == "bit") {
    Rng rng(options.seed);
    return bit(oracle.n(), rng.coin());
  }
  throw std::invalid_argument("unknown algorithm '" + alg + "' (expected " + join(algorithm_names()) + ")");
}

// "4" or "3..6".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t lo, hi;
    if (dots == std::string::npos) {
      lo = hi = std::stoul(text);
    } else {
      lo = std::stoul(text.substr(0, dots));
      hi = std::stoul(text.substr(dots + 2));
    }
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "' (expected N or A..B)");
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write " + path);
  file << text;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + scalar_text(v[k]);
    return out + ")";
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, val] : v.items()) out += (out.empty() ? "" : " ") + key + "=" + scalar_text(val);
    return out;
  }
  return v.dump();
}

void print_report(const ordered_json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, val] : report.items()) out << key << ": " << scalar_text(val) << "\n";
}

// ---- verify suites -------------------------------------------------------

struct Tally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  CheckResult result() const {
    std::string detail = std::to_string(checked) + " checked";
    if (failed) detail += ", " + std::to_string(failed) + " failed, first: " + first_failure;
    return {name, failed == 0 && checked > 0, detail};
  }
};

std::uint64_t cell_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return derive_seed({seed, a, b, c});
}

std::vector<CheckResult> suite_monotonicity(std::uint64_t seed, std::size_t instances,
                                            const EnumerationCaps& caps) {
  std::vector<CheckResult> out;
  auto sweep = [&](const std::string& name, auto make) {
    Tally t{name};
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 0; k < instances; ++k) {
        ValuationOracle o = make(n, cell_seed(seed, n, k, name.size()));
        t.record(check_monotone_exhaustive(o, caps), "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
    out.push_back(t.result());
  };
  sweep("osm monotone", [](std::size_t n, std::uint64_t s) { return osm_oracle(random_matching_instance(n, s)); });
  sweep("osa monotone", [](std::size_t n, std::uint64_t s) { return osa_oracle(random_digraph_instance(n, s)); });
  sweep("osi monotone", [](std::size_t n, std::uint64_t s) { return osi_oracle(random_osi_instance(n, s)); });
  sweep("general monotone", [](std::size_t n, std::uint64_t s) { return make_general_oracle({n, s, 10}); });
  {
    Tally t{"lowerbound monotone"};
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t c = 1; c <= n; ++c) {
        ValuationOracle o = make_lower_bound_oracle(random_lower_bound_instance(n, c, cell_seed(seed, n, c, 7)));
        t.record(check_monotone_exhaustive(o, caps), "n=" + std::to_string(n) + " c=" + std::to_string(c));
      }
    }
    out.push_back(t.result());
  }
  {
    ValuationOracle o = oss_oracle(oss_nonmonotone_instance());
    const auto v = find_monotonicity_violation(o, caps);
    const bool ok = v && v->agent == 2 && v->smaller == ActionSeq{1} && v->larger == ActionSeq{0, 1} &&
                    v->smaller_value == 1 && v->larger_value == 2;
    out.push_back({"oss witness instance not monotone", ok,
                   v ? "v_" + std::to_string(v->agent) + v->larger.to_string() + " = " +
                           format_rational(v->larger_value) + " > v_" + std::to_string(v->agent) +
                           v->smaller.to_string() + " = " + format_rational(v->smaller_value)
                     : "no violation found"});
  }
  {
    // Longest-paths valuations are not monotone; the suite pins the witness.
    ValuationOracle o = paths_oracle(paths_nonmonotone_instance());
    const bool ok = o.query(3, ActionSeq{1}) == 0 && o.query(3, ActionSeq{0, 1}) == 1 &&
                    !check_monotone_exhaustive(o, caps);
    out.push_back({"paths witness not monotone", ok, "v_3(1) = 0 < v_3(0,1) = 1"});
  }
  return out;
}

std::vector<CheckResult> suite_pareto(std::uint64_t seed, std::size_t instances, const EnumerationCaps& caps) {
  Tally osm{"osm pareto three-way agreement"};
  Tally osa{"osa pareto three-way agreement"};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 0; k < instances; ++k) {
      const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      // Small weight range so that ties and dominated outcomes occur.
      const auto m = random_matching_instance(n, cell_seed(seed, n, k, 1), 3);
      std::vector<Matching> produced;
      const auto a = random_digraph_instance(n, cell_seed(seed, n, k, 2), 3);
      std::vector<Arborescence> trees;
      ActionSeq p = ActionSeq::ascending(n);
      std::vector<AgentId> perm(p.begin(), p.end());
      do {
        produced.push_back(matching_from_sequence(m, ActionSeq(perm)));
        trees.push_back(arborescence_from_sequence(a, ActionSeq(perm)));
      } while (std::next_permutation(perm.begin(), perm.end()));
      for_each_perfect_matching(n, caps, [&](const Matching& mu) {
        const bool by_seq = std::find(produced.begin(), produced.end(), mu) != produced.end();
        const bool alg = sequence_for_matching(m, mu).has_value();
        const bool pareto = is_pareto_optimal_matching(m, mu, caps);
        osm.record(by_seq == alg && alg == pareto, where);
      });
      for_each_arborescence(n, caps, [&](const Arborescence& t) {
        const bool by_seq = std::find(trees.begin(), trees.end(), t) != trees.end();
        const bool alg = sequence_for_arborescence(a, t).has_value();
        const bool pareto = is_pareto_optimal_arborescence(a, t, caps);
        osa.record(by_seq == alg && alg == pareto, where);
      });
    }
  }
  return {osm.result(), osa.result()};
}

std::vector<CheckResult> suite_approx(std::uint64_t seed, std::size_t instances, const EnumerationCaps& caps) {
  Tally d{"det ratio at most n/c"};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k < instances; ++k) {
      ValuationOracle o = make_general_oracle({n, cell_seed(seed, n, k, 3), 10});
      const Value opt = brute_force_optimal_sequence(o, caps).welfare;
      for (std::size_t c = 1; c <= n; ++c) {
        ValuationOracle run = o;
        const Value sw = social_welfare(o, det(run, c));
        d.record(Value(static_cast<long>(n)) * sw >= Value(static_cast<long>(c)) * opt,
                 "n=" + std::to_string(n) + " c=" + std::to_string(c));
      }
    }
  }
  Tally gm{"greedy-osm ratio at most 2"};
  Tally ga{"greedy-osa ratio at most 2"};
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t k = 0; k < instances; ++k) {
      const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      ValuationOracle m = osm_oracle(random_matching_instance(n, cell_seed(seed, n, k, 4)));
      ValuationOracle mr = m;
      gm.record(2 * social_welfare(m, greedy_osm(mr)) >= brute_force_optimal_sequence(m, caps).welfare, where);
      ValuationOracle a = osa_oracle(random_digraph_instance(n, cell_seed(seed, n, k, 5)));
      ValuationOracle ar = a;
      ga.record(2 * social_welfare(a, greedy_osa(ar)) >= brute_force_optimal_sequence(a, caps).welfare, where);
    }
  }
  Tally s{"every oss sequence within 2 of total weight"};
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 0; k < instances; ++k) {
      const SatInstance inst = random_sat_instance(n, 2 * n + k % 3, 3, cell_seed(seed, n, k, 6));
      ValuationOracle o = oss_oracle(inst);
      const Value total = inst.total_weight();
      std::vector<AgentId> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      do {
        s.record(2 * social_welfare(o, ActionSeq(perm)) >= total, "n=" + std::to_string(n));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return {d.result(), gm.result(), ga.result(), s.result()};
}

std::vector<ValuationTable> misreports_for(const ValuationProfile& p, AgentId i) {
  const ValuationTable& truth = p.table(i);
  std::vector<ValuationTable> out;
  out.push_back(ValuationTable::constant(p.n(), i, Value(0)));
  out.push_back(ValuationTable::constant(p.n(), i, Value(20)));
  out.push_back(ValuationTable::from_function(p.n(), i, [&truth](const ActionSeq& s) {
    return Value(2 * truth.value(s) + 1);
  }));
  return out;
}

std::vector<CheckResult> suite_truthful(std::uint64_t seed, std::size_t instances, const EnumerationCaps& caps) {
  std::vector<CheckResult> out;
  for (const char* eps : {"1/10", "1/100"}) {
    for (const Counterexample& c : counterexample_profiles(parse_rational(eps), 4, 2)) {
      const CycleMonTerms t = cycle_mon_terms(c.algorithm, c.profile, c.alternative);
      out.push_back({c.name + " cycle-monotonicity violated (eps=" + eps + ")", t.truthful < t.swapped,
                     format_rational(t.truthful) + " < " + format_rational(t.swapped)});
    }
  }
  Tally vcg{"vcg truthful, individually rational, non-negative payments"};
  for (const Counterexample& c : counterexample_profiles(make_value(1, 10), 4, 2)) {
    const std::size_t n = c.profile.n();
    std::vector<std::vector<ValuationTable>> lies(n);
    for (AgentId i = 0; i < n; ++i) lies[i] = misreports_for(c.profile, i);
    lies[c.alternative.agent()].push_back(c.alternative);
    const std::size_t cc = std::min<std::size_t>(2, n);
    for (const auto& [label, mech] : {std::pair{std::string("vcg-rand"), vcg_rand_mechanism(cc)},
                                      std::pair{std::string("vcg-det-plus"), vcg_det_plus_mechanism(cc, caps)}}) {
      const std::string where = label + " on " + c.name;
      vcg.record(truthfulness_spotcheck(mech, c.profile, lies).violations.empty(), where + ": misreport gains");
      for (const WeightedOutcome& w : mech(c.profile)) {
        for (AgentId i = 0; i < n; ++i) {
          vcg.record(w.outcome.payments[i] >= 0, where + ": negative payment");
          vcg.record(utility(c.profile.table(i), w.outcome) >= 0, where + ": negative utility");
        }
      }
    }
  }
  out.push_back(vcg.result());
  Tally b{"bit expected welfare at least half of optimum"};
  for (std::size_t k = 0; k < std::max<std::size_t>(instances, 1) * 10; ++k) {
    const std::size_t n = 1 + k % 6;
    ValuationOracle o = osa_oracle(random_digraph_instance(n, cell_seed(seed, n, k, 8)));
    const Value expected = (social_welfare(o, bit(n, true)) + social_welfare(o, bit(n, false))) / 2;
    b.record(2 * expected >= brute_force_optimal_sequence(o, caps).welfare, "n=" + std::to_string(n));
  }
  out.push_back(b.result());
  return out;
}

std::vector<CheckResult> suite_lowerbound(std::uint64_t seed, std::size_t instances,
                                          const EnumerationCaps& caps) {
  Tally opt{"lowerbound optimum is n"};
  Tally rest{"lowerbound off-prefix sequences score c"};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t c = 1; c <= n; ++c) {
      for (std::size_t k = 0; k < std::max<std::size_t>(1, instances / 5); ++k) {
        const LowerBoundInstance inst = random_lower_bound_instance(n, c, cell_seed(seed, n, c, k));
        ValuationOracle o = make_lower_bound_oracle(inst);
        const std::string where = "n=" + std::to_string(n) + " c=" + std::to_string(c);
        opt.record(brute_force_optimal_sequence(o, caps).welfare == static_cast<long>(n) &&
                       social_welfare(o, inst.hidden_pi) == static_cast<long>(n),
                   where);
        std::vector<AgentId> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        do {
          const ActionSeq s(perm);
          if (!is_subsequence(s.first(c), inst.hidden_pi)) {
            rest.record(social_welfare(o, s) == static_cast<long>(c), where + " s=" + s.to_string());
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return {opt.result(), rest.result()};
}

std::vector<CheckResult> suite_x3c(const EnumerationCaps& caps) {
  const SatInstance yes = x3c_reduce(3, {{0, 1, 2}});
  const SatInstance no = x3c_reduce(6, {{0, 1, 2}, {1, 2, 3}});
  const auto found_yes = sat_as_decide(yes, Assignment(yes.n, true), caps);
  const auto found_no = sat_as_decide(no, Assignment(no.n, true), caps);
  auto count_ok = [](const SatInstance& s, std::size_t q, std::size_t t) {
    return 2 * s.clauses.size() == t * t + 7 * t + 6 * q + 2 && s.n == 3 * q + t + 1;
  };
  return {
      {"x3c yes-instance admits all-True", found_yes.has_value(),
       found_yes ? "sequence " + found_yes->to_string() : "no sequence"},
      {"x3c no-instance rejects all-True", !found_no.has_value(),
       found_no ? "unexpected sequence " + found_no->to_string() : "no sequence"},
      {"x3c clause and variable counts", count_ok(yes, 1, 1) && count_ok(no, 2, 2),
       std::to_string(yes.clauses.size()) + " and " + std::to_string(no.clauses.size()) + " clauses"},
  };
}

// ---- command handlers ----------------------------------------------------

struct Globals {
  std::string caps_text;
  EnumerationCaps caps() const {
    return caps_text.empty() ? EnumerationCaps::from_environment() : EnumerationCaps::parse(caps_text);
  }
};

ordered_json envelope(const std::string& command) {
  return ordered_json{{"schema_version", kSchemaVersion}, {"command", command}};
}

}  // namespace

const std::vector<std::string>& instance_kinds() {
  static const std::vector<std::string> k{"osm", "osa", "oss", "osi", "paths", "lowerbound", "general"};
  return k;
}

const std::vector<std::string>& paper_instance_names() {
  static const std::vector<std::string> k{"sat-posd",           "paths-posd",         "oss-nonmono",
                                          "osm-counterexample", "osa-counterexample", "x3c"};
  return k;
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> k{"det", "rand", "det-plus", "greedy-osm", "greedy-osa", "bit", "osi-learn"};
  return k;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> k{"monotonicity", "pareto", "approx", "truthful", "lowerbound", "x3c"};
  return k;
}

AnyInstance generate(const GenOptions& o) {
  if (!o.paper.empty()) {
    if (o.paper == "sat-posd") return posd_sat_instance(o.eps);
    if (o.paper == "paths-posd") return posd_paths_instance(o.eps);
    if (o.paper == "oss-nonmono") return oss_nonmonotone_instance();
    if (o.paper == "osm-counterexample") return osm_counterexample(o.eps);
    if (o.paper == "osa-counterexample") return osa_counterexample(o.eps);
    if (o.paper == "x3c") {
      return o.no_cover ? x3c_reduce(6, {{0, 1, 2}, {1, 2, 3}}) : x3c_reduce(3, {{0, 1, 2}});
    }
    throw std::invalid_argument("unknown paper instance '" + o.paper + "' (expected " +
                                join(paper_instance_names()) + ")");
  }
  if (!contains(instance_kinds(), o.kind)) {
    throw std::invalid_argument("unknown kind '" + o.kind + "' (expected " + join(instance_kinds()) + ")");
  }
  if (o.n < 1) throw std::invalid_argument("n must be at least 1");
  if (o.kind == "osm") return random_matching_instance(o.n, o.seed, o.denominator);
  if (o.kind == "osa") return random_digraph_instance(o.n, o.seed, o.denominator);
  if (o.kind == "oss") {
    return random_sat_instance(o.n, o.clauses.value_or(2 * o.n), o.max_clause_len, o.seed, o.denominator);
  }
  if (o.kind == "osi") return random_osi_instance(o.n, o.seed);
  if (o.kind == "paths") return random_paths_instance(o.n, o.seed, o.denominator);
  if (o.kind == "lowerbound") return random_lower_bound_instance(o.n, o.c, o.seed);
  GeneralInstance g{o.n, o.seed, o.denominator};
  g.validate();
  return g;
}

ordered_json run_report(const AnyInstance& inst, const RunOptions& options, const EnumerationCaps& caps) {
  ValuationOracle oracle = oracle_for(inst);
  const ActionSeq seq = run_algorithm(inst, oracle, options, caps);
  ValuationOracle eval = oracle;
  ordered_json values = ordered_json::array();
  Value welfare = 0;
  for (AgentId i = 0; i < eval.n(); ++i) {
    const Value v = eval.query(i, prefix_of(seq, i));
    welfare += v;
    values.push_back(format_rational(v));
  }
  std::optional<OptimalSequence> best;
  try {
    best = brute_force_optimal_sequence(eval, caps);
  } catch (const CapExceeded&) {
  }
  const std::optional<Value> ratio = best ? welfare_ratio(best->welfare, welfare) : std::nullopt;

  ordered_json r = envelope("run");
  r["kind"] = kind_of(inst);
  r["algorithm"] = options.algorithm;
  r["c"] = uses_c(options.algorithm) ? ordered_json(options.c) : ordered_json(nullptr);
  r["seed"] = options.seed;
  r["caps"] = caps.to_string();
  r["sequence"] = seq.agents();
  r["values"] = std::move(values);
  r["welfare"] = rational(welfare);
  r["welfare_decimal"] = format_decimal(welfare);
  r["queries"] = {{"total", oracle.ledger().total_calls()}, {"distinct", oracle.ledger().distinct_calls()}};
  r["optimum"] = best ? rational(best->welfare) : ordered_json(nullptr);
  r["optimum_sequence"] = best ? ordered_json(best->sequence.agents()) : ordered_json(nullptr);
  r["ratio"] = optional_rational(ratio);
  r["ratio_decimal"] = ratio ? ordered_json(format_decimal(*ratio)) : ordered_json(nullptr);
  return r;
}

ordered_json posd_report(const AnyInstance& inst, const EnumerationCaps& caps) {
  const auto s = structured(inst);
  if (!s) throw std::invalid_argument("posd needs an osm, osa, oss, osi or paths instance, got " + kind_of(inst));
  const PosdReport p = price_of_serial_dictatorship(*s, caps);
  ordered_json r = envelope("posd");
  r["kind"] = kind_of(inst);
  r["caps"] = caps.to_string();
  r["optimum"] = rational(p.optimum);
  r["best_welfare"] = rational(p.best.welfare);
  r["best_sequence"] = p.best.sequence.agents();
  r["ratio"] = optional_rational(p.ratio);
  r["ratio_decimal"] = p.ratio ? ordered_json(format_decimal(*p.ratio)) : ordered_json(nullptr);
  return r;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed, std::size_t instances,
                                          const EnumerationCaps& caps) {
  if (suite == "monotonicity") return suite_monotonicity(seed, instances, caps);
  if (suite == "pareto") return suite_pareto(seed, instances, caps);
  if (suite == "approx") return suite_approx(seed, instances, caps);
  if (suite == "truthful") return suite_truthful(seed, instances, caps);
  if (suite == "lowerbound") return suite_lowerbound(seed, instances, caps);
  if (suite == "x3c") return suite_x3c(caps);
  throw std::invalid_argument("unknown suite '" + suite + "' (expected " + join(verify_suites()) + ")");
}

void write_bench_csv(const BenchOptions& o, const EnumerationCaps& caps, std::ostream& out) {
  if (!contains(algorithm_names(), o.algorithm)) {
    throw std::invalid_argument("unknown algorithm '" + o.algorithm + "'");
  }
  out << "kind,algorithm,n,c,trials,mean_ratio,max_ratio,infinite_ratios,mean_queries,mean_micros\n";
  if (o.trials == 0) return;
  const bool with_c = uses_c(o.algorithm);
  for (std::size_t n = o.n_min; n <= o.n_max; ++n) {
    const std::size_t c_lo = with_c ? std::max<std::size_t>(o.c_min, 1) : 0;
    const std::size_t c_hi = with_c ? std::min(o.c_max, n) : 0;
    for (std::size_t c = c_lo; c <= c_hi; ++c) {
      Value ratio_sum = 0;
      Value ratio_max = 0;
      std::size_t finite = 0, infinite = 0, unknown = 0;
      std::uint64_t queries = 0;
      double micros = 0;
      for (std::size_t t = 0; t < o.trials; ++t) {
        GenOptions g;
        g.kind = o.kind;
        g.n = n;
        g.seed = derive_seed({o.seed, n, c, t});
        const AnyInstance inst = generate(g);
        ValuationOracle oracle = oracle_for(inst);
        const RunOptions run{o.algorithm, c, derive_seed({o.seed, n, c, t, 1})};
        const auto start = std::chrono::steady_clock::now();
        const ActionSeq seq = run_algorithm(inst, oracle, run, caps);
        micros += std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
        queries += oracle.ledger().total_calls();
        ValuationOracle eval = oracle;
        try {
          const auto ratio = welfare_ratio(brute_force_optimal_sequence(eval, caps).welfare, social_welfare(eval, seq));
          if (!ratio) {
            ++infinite;
            continue;
          }
          ratio_sum += *ratio;
          if (*ratio > ratio_max) ratio_max = *ratio;
          ++finite;
        } catch (const CapExceeded&) {
          ++unknown;
        }
      }
      out << o.kind << ',' << o.algorithm << ',' << n << ',' << (with_c ? std::to_string(c) : "") << ','
          << o.trials << ',';
      if (finite) {
        out << format_decimal(ratio_sum / Value(static_cast<long>(finite))) << ',' << format_decimal(ratio_max);
      } else {
        out << ',';
      }
      out << ',' << infinite << ',' << static_cast<double>(queries) / o.trials << ','
          << micros / o.trials << '\n';
    }
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Serial dictatorship sequence optimizer", "seqdict"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--caps", globals.caps_text,
                 "Enumeration caps, e.g. permutation=9,subset=16 (default: $SEQDICT_CAPS or built-ins)");

  GenOptions gen;
  std::string gen_output, gen_eps = "1/10";
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "Instance kind: " + join(instance_kinds()));
  gen_cmd->add_option("n", gen.n, "Number of agents");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--paper", gen.paper, "Named instance: " + join(paper_instance_names()));
  gen_cmd->add_option("--eps", gen_eps, "Epsilon for named instances, as p/q");
  gen_cmd->add_option("--c", gen.c, "Prefix threshold for lowerbound instances");
  gen_cmd->add_option("--clauses", gen.clauses, "Clause count for oss instances (default 2n)");
  gen_cmd->add_option("--max-clause-len", gen.max_clause_len, "Longest clause for oss instances");
  gen_cmd->add_option("--denominator", gen.denominator, "Weights are k/denominator");
  gen_cmd->add_flag("--no-cover", gen.no_cover, "x3c: the instance without an exact cover");
  gen_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");

  std::string run_file;
  RunOptions run;
  bool run_json = false;
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm on an instance file");
  run_cmd->add_option("instance", run_file, "Instance file, or - for stdin")->required();
  run_cmd->add_option("algorithm", run.algorithm, "Algorithm: " + join(algorithm_names()))->required();
  run_cmd->add_option("--c", run.c, "Prefix size for det, rand and det-plus");
  run_cmd->add_option("--seed", run.seed, "Seed for rand and bit");
  run_cmd->add_flag("--json", run_json, "Machine-readable report");

  std::string posd_file;
  bool posd_json = false;
  auto* posd_cmd = app.add_subcommand("posd", "Price of serial dictatorship of an instance");
  posd_cmd->add_option("instance", posd_file, "Instance file, or - for stdin")->required();
  posd_cmd->add_flag("--json", posd_json, "Machine-readable report");

  std::string suite;
  std::uint64_t verify_seed = 1;
  std::size_t verify_instances = 10;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", suite, "Suite: " + join(verify_suites()))->required();
  verify_cmd->add_option("--seed", verify_seed, "Seed for the random instances");
  verify_cmd->add_option("--instances", verify_instances, "Random instances per size");
  verify_cmd->add_flag("--json", verify_json, "Machine-readable report");

  BenchOptions bench;
  std::string n_range = "3..5", c_range = "1", bench_output;
  auto* bench_cmd = app.add_subcommand("bench", "Approximation ratios and query counts as CSV");
  bench_cmd->add_option("kind", bench.kind, "Instance kind: " + join(instance_kinds()))->required();
  bench_cmd->add_option("--algorithm", bench.algorithm, "Algorithm: " + join(algorithm_names()))->required();
  bench_cmd->add_option("--n-range", n_range, "Agent counts, N or A..B");
  bench_cmd->add_option("--c-range", c_range, "Prefix sizes, N or A..B");
  bench_cmd->add_option("--trials", bench.trials, "Instances per cell");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("-o,--output", bench_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const EnumerationCaps caps = globals.caps();
    if (gen_cmd->parsed()) {
      gen.eps = parse_rational(gen_eps);
      if (gen.paper.empty() && (gen.kind.empty() || gen_cmd->count("n") == 0)) {
        throw std::invalid_argument("gen needs KIND N or --paper NAME");
      }
      write_output(gen_output, serialize(generate(gen)), out);
      return kExitOk;
    }
    if (run_cmd->parsed()) {
      print_report(run_report(parse_instance(read_input(run_file)), run, caps), run_json, out);
      return kExitOk;
    }
    if (posd_cmd->parsed()) {
      print_report(posd_report(parse_instance(read_input(posd_file)), caps), posd_json, out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto checks = run_verify_suite(suite, verify_seed, verify_instances, caps);
      const bool passed = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
      if (verify_json) {
        ordered_json r = envelope("verify");
        r["suite"] = suite;
        r["seed"] = verify_seed;
        r["caps"] = caps.to_string();
        r["passed"] = passed;
        r["checks"] = ordered_json::array();
        for (const auto& c : checks) {
          r["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        out << r.dump(2) << "\n";
      } else {
        for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        out << suite << ": " << (passed ? "passed" : "FAILED") << "\n";
      }
      return passed ? kExitOk : kExitCheckFailed;
    }
    if (bench_cmd->parsed()) {
      std::tie(bench.n_min, bench.n_max) = parse_range(n_range);
      std::tie(bench.c_min, bench.c_max) = parse_range(c_range);
      if (!contains(instance_kinds(), bench.kind)) {
        throw std::invalid_argument("unknown kind '" + bench.kind + "'");
      }
      std::ostringstream csv;
      write_bench_csv(bench, caps, csv);
      write_output(bench_output, csv.str(), out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace seqdict::cli
