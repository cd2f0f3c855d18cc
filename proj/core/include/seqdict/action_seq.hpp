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

#ifndef SEQDICT_ACTION_SEQ_HPP_
#define SEQDICT_ACTION_SEQ_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace seqdict {

// Agents are identified by 0-based indices in [0, n).
using AgentId = std::size_t;

// An ordered, duplicate-free list of agents. Used both for full action
// sequences (every agent exactly once) and for the subsequences that serve as
// oracle query arguments. Comparison is lexicographic.
class ActionSeq {
 public:
  using const_iterator = std::vector<AgentId>::const_iterator;

  ActionSeq() = default;
  ActionSeq(std::initializer_list<AgentId> agents);
  // Throws std::invalid_argument if an agent repeats.
  explicit ActionSeq(std::vector<AgentId> agents);

  static ActionSeq ascending(std::size_t n);
  static ActionSeq descending(std::size_t n);

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  AgentId operator[](std::size_t pos) const { return order_[pos]; }
  const_iterator begin() const { return order_.begin(); }
  const_iterator end() const { return order_.end(); }
  const std::vector<AgentId>& agents() const { return order_; }

  bool contains(AgentId agent) const;
  std::optional<std::size_t> position_of(AgentId agent) const;

  // Throws std::invalid_argument if the agent is already present.
  void push_back(AgentId agent);
  void pop_back() { order_.pop_back(); }

  // S || other, S \ j and S|_c respectively.
  ActionSeq concat(const ActionSeq& other) const;
  ActionSeq without(AgentId agent) const;
  ActionSeq first(std::size_t count) const;

  // True when the sequence is a permutation of [0, n).
  bool is_full(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const ActionSeq&, const ActionSeq&) = default;
  friend auto operator<=>(const ActionSeq&, const ActionSeq&) = default;

 private:
  std::vector<AgentId> order_;
};

// The agents strictly ahead of `agent` in `seq`. Throws std::invalid_argument
// ("agent not in sequence") when the agent is absent.
ActionSeq prefix_of(const ActionSeq& seq, AgentId agent);

// True iff every agent of `a` appears in `b` in the same relative order.
bool is_subsequence(const ActionSeq& a, const ActionSeq& b);

}  // namespace seqdict

#endif  // SEQDICT_ACTION_SEQ_HPP_
