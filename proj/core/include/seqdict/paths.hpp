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

#ifndef SEQDICT_PATHS_HPP_
#define SEQDICT_PATHS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/oracle.hpp"
#include "seqdict/value.hpp"

namespace seqdict {

// Complete digraph; each agent adds one out-edge while the drawn edges stay a
// union of vertex-disjoint directed paths. Diagonal weights are unused.
struct PathsInstance {
  std::vector<std::vector<Value>> weights;

  std::size_t n() const { return weights.size(); }
  void validate() const;
  friend bool operator==(const PathsInstance&, const PathsInstance&) = default;
};

// next[i] is the head of i's out-edge, if any.
struct PathUnion {
  std::vector<std::optional<AgentId>> next;

  // Out- and in-degree at most one, no cycles.
  bool is_valid() const;
  friend bool operator==(const PathUnion&, const PathUnion&) = default;
};

// An agent takes its heaviest addable edge (smallest target on ties), even at
// weight 0, and gets 0 when no edge is addable. These valuations are not
// monotone in general, so the oracle does not claim monotonicity.
ValuationOracle paths_oracle(const PathsInstance& inst);

PathUnion paths_from_sequence(const PathsInstance& inst, const ActionSeq& seq);
Value path_union_weight(const PathsInstance& inst, const PathUnion& p);
// Exhaustive over all path unions.
Value max_path_union_weight(const PathsInstance& inst, const EnumerationCaps& caps = {});

// Four nodes: unit edges 0->1->2->3 and edges 0->3, 1->3, 2->1 of weight
// 1 + eps. Requires eps > 0.
PathsInstance posd_paths_instance(const Value& eps);

// Four nodes on which v_3 is not monotone: v_3((1)) = 0 but v_3((0,1)) = 1.
PathsInstance paths_nonmonotone_instance();

PathsInstance random_paths_instance(std::size_t n, std::uint64_t seed,
                                    std::uint64_t weight_denominator = 10);

}  // namespace seqdict

#endif  // SEQDICT_PATHS_HPP_
