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

#ifndef SEQDICT_OSI_HPP_
#define SEQDICT_OSI_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqdict/action_seq.hpp"
#include "seqdict/caps.hpp"
#include "seqdict/oracle.hpp"

namespace seqdict {

// Undirected graph; v_i(S) = 1 iff S together with i is an independent set.
struct OsiInstance {
  std::vector<std::vector<bool>> adjacency;

  std::size_t n() const { return adjacency.size(); }
  // Symmetric, square, no self-loops.
  void validate() const;
  friend bool operator==(const OsiInstance&, const OsiInstance&) = default;
};

ValuationOracle osi_oracle(const OsiInstance& inst);

// Largest independent set, lexicographically smallest among the largest,
// ascending. Branch and bound over 2^n subsets.
std::vector<AgentId> maximum_independent_set(const std::vector<std::vector<bool>>& adjacency,
                                             const EnumerationCaps& caps = {});

// Learns the graph with the n(n-1) queries v_i((j)), then places a maximum
// independent set first and the other agents after it, both ascending.
ActionSeq osi_learn_and_solve(ValuationOracle& oracle, const EnumerationCaps& caps = {});

// G(n, 1/2) graph.
OsiInstance random_osi_instance(std::size_t n, std::uint64_t seed);

}  // namespace seqdict

#endif  // SEQDICT_OSI_HPP_
