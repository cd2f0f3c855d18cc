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

#include "seqdict/oracle.hpp"

#include <stdexcept>

namespace seqdict {

void QueryLedger::record(AgentId agent, const ActionSeq& seq) {
  ++total_;
  std::string key;
  key.reserve((seq.size() + 1) * sizeof(AgentId));
  key.append(reinterpret_cast<const char*>(&agent), sizeof(AgentId));
  for (AgentId a : seq) key.append(reinterpret_cast<const char*>(&a), sizeof(AgentId));
  distinct_.insert(std::move(key));
}

void QueryLedger::reset() {
  total_ = 0;
  distinct_.clear();
}

ValuationOracle::ValuationOracle(std::size_t n, QueryFn fn, bool monotone_claimed)
    : n_(n), fn_(std::make_shared<const QueryFn>(std::move(fn))), monotone_claimed_(monotone_claimed) {}

ValuationOracle::ValuationOracle(const ValuationOracle& other)
    : n_(other.n_), fn_(other.fn_), monotone_claimed_(other.monotone_claimed_) {}

ValuationOracle& ValuationOracle::operator=(const ValuationOracle& other) {
  if (this != &other) {
    n_ = other.n_;
    fn_ = other.fn_;
    monotone_claimed_ = other.monotone_claimed_;
    ledger_.reset();
  }
  return *this;
}

Value ValuationOracle::query(AgentId agent, const ActionSeq& seq) {
  if (agent >= n_) throw std::invalid_argument("agent out of range");
  for (AgentId a : seq) {
    if (a >= n_) throw std::invalid_argument("subsequence agent out of range");
    if (a == agent) throw std::invalid_argument("subsequence contains the queried agent");
  }
  ledger_.record(agent, seq);
  return (*fn_)(agent, seq);
}

}  // namespace seqdict
