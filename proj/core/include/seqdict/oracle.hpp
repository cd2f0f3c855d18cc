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

#ifndef SEQDICT_ORACLE_HPP_
#define SEQDICT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_set>

#include "seqdict/action_seq.hpp"
#include "seqdict/value.hpp"

namespace seqdict {

// Counts oracle calls. Identical repeated queries count once in
// distinct_calls and every time in total_calls.
class QueryLedger {
 public:
  void record(AgentId agent, const ActionSeq& seq);
  std::uint64_t total_calls() const { return total_; }
  std::uint64_t distinct_calls() const { return distinct_.size(); }
  void reset();

 private:
  std::uint64_t total_ = 0;
  std::unordered_set<std::string> distinct_;
};

// The only access path to v_i(S). Copies share the immutable instance data but
// get a fresh, independent ledger, so one copy can be handed to each run.
class ValuationOracle {
 public:
  using QueryFn = std::function<Value(AgentId, const ActionSeq&)>;

  ValuationOracle(std::size_t n, QueryFn fn, bool monotone_claimed);
  ValuationOracle(const ValuationOracle& other);
  ValuationOracle& operator=(const ValuationOracle& other);
  ValuationOracle(ValuationOracle&&) noexcept = default;
  ValuationOracle& operator=(ValuationOracle&&) noexcept = default;

  std::size_t n() const { return n_; }
  bool monotone_claimed() const { return monotone_claimed_; }

  // v_agent(seq). Throws std::invalid_argument if agent or any element of seq
  // is out of range, or if seq contains agent.
  Value query(AgentId agent, const ActionSeq& seq);

  const QueryLedger& ledger() const { return ledger_; }
  void reset_ledger() { ledger_.reset(); }

 private:
  std::size_t n_;
  std::shared_ptr<const QueryFn> fn_;
  bool monotone_claimed_;
  QueryLedger ledger_;
};

}  // namespace seqdict

#endif  // SEQDICT_ORACLE_HPP_
