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

#include "seqdict/action_seq.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqdict {

ActionSeq::ActionSeq(std::initializer_list<AgentId> agents)
    : ActionSeq(std::vector<AgentId>(agents)) {}

ActionSeq::ActionSeq(std::vector<AgentId> agents) : order_(std::move(agents)) {
  std::vector<AgentId> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate agent in action sequence");
  }
}

ActionSeq ActionSeq::ascending(std::size_t n) {
  ActionSeq seq;
  seq.order_.reserve(n);
  for (AgentId i = 0; i < n; ++i) seq.order_.push_back(i);
  return seq;
}

ActionSeq ActionSeq::descending(std::size_t n) {
  ActionSeq seq = ascending(n);
  std::reverse(seq.order_.begin(), seq.order_.end());
  return seq;
}

bool ActionSeq::contains(AgentId agent) const {
  return std::find(order_.begin(), order_.end(), agent) != order_.end();
}

std::optional<std::size_t> ActionSeq::position_of(AgentId agent) const {
  auto it = std::find(order_.begin(), order_.end(), agent);
  if (it == order_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - order_.begin());
}

void ActionSeq::push_back(AgentId agent) {
  if (contains(agent)) {
    throw std::invalid_argument("duplicate agent in action sequence");
  }
  order_.push_back(agent);
}

ActionSeq ActionSeq::concat(const ActionSeq& other) const {
  std::vector<AgentId> joined = order_;
  joined.insert(joined.end(), other.order_.begin(), other.order_.end());
  return ActionSeq(std::move(joined));
}

ActionSeq ActionSeq::without(AgentId agent) const {
  ActionSeq out;
  out.order_.reserve(order_.size());
  for (AgentId a : order_) {
    if (a != agent) out.order_.push_back(a);
  }
  return out;
}

ActionSeq ActionSeq::first(std::size_t count) const {
  ActionSeq out;
  out.order_.assign(order_.begin(),
                    order_.begin() + static_cast<std::ptrdiff_t>(std::min(count, order_.size())));
  return out;
}

bool ActionSeq::is_full(std::size_t n) const {
  if (order_.size() != n) return false;
  return std::all_of(order_.begin(), order_.end(), [n](AgentId a) { return a < n; });
}

std::string ActionSeq::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(order_[k]);
  }
  return out + ")";
}

ActionSeq prefix_of(const ActionSeq& seq, AgentId agent) {
  auto pos = seq.position_of(agent);
  if (!pos) throw std::invalid_argument("agent not in sequence");
  return seq.first(*pos);
}

bool is_subsequence(const ActionSeq& a, const ActionSeq& b) {
  auto it = b.begin();
  for (AgentId x : a) {
    it = std::find(it, b.end(), x);
    if (it == b.end()) return false;
    ++it;
  }
  return true;
}

}  // namespace seqdict
