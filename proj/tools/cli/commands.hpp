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

#ifndef SEQDICT_CLI_COMMANDS_HPP_
#define SEQDICT_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "instance_file.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/value.hpp"

namespace seqdict::cli {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

// Entry point shared by the binary and the tests. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string paper;  // empty, or one of paper_instance_names()
  Value eps = make_value(1, 10);
  std::size_t c = 1;                  // lowerbound
  std::optional<std::size_t> clauses; // oss, default 2n
  std::size_t max_clause_len = 3;     // oss
  std::uint64_t denominator = 10;
  bool no_cover = false;  // x3c: emit the instance without an exact cover
};

const std::vector<std::string>& instance_kinds();
const std::vector<std::string>& paper_instance_names();
const std::vector<std::string>& algorithm_names();
const std::vector<std::string>& verify_suites();

// Throws std::invalid_argument on bad options.
AnyInstance generate(const GenOptions& options);

struct RunOptions {
  std::string algorithm;
  std::size_t c = 1;
  std::uint64_t seed = 0;
};

// Runs the algorithm and returns the report. The brute-force optimum and the
// ratio are null when the instance exceeds the caps.
nlohmann::ordered_json run_report(const AnyInstance& inst, const RunOptions& options, const EnumerationCaps& caps);
nlohmann::ordered_json posd_report(const AnyInstance& inst, const EnumerationCaps& caps);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed,
                                          std::size_t instances, const EnumerationCaps& caps);

struct BenchOptions {
  std::string kind;
  std::string algorithm;
  std::size_t n_min = 3, n_max = 5;
  std::size_t c_min = 1, c_max = 1;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
};

// CSV with one row per (n, c) cell; header only when trials is 0.
void write_bench_csv(const BenchOptions& options, const EnumerationCaps& caps, std::ostream& out);

}  // namespace seqdict::cli

#endif  // SEQDICT_CLI_COMMANDS_HPP_
