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

#ifndef SEQDICT_WCNF_HPP_
#define SEQDICT_WCNF_HPP_

#include <string>
#include <string_view>

#include "seqdict/oss.hpp"

namespace seqdict {

// DIMACS-style weighted CNF with exact weights:
//
//   c tie_default 1 1 0
//   p wcnf <variables> <clauses>
//   3/2 1 -2 0
//
// Each clause line is a "p/q" weight followed by 1-based signed literals and a
// terminating 0. The tie_default comment is optional (all True when absent).
std::string write_wcnf(const SatInstance& inst);
// Throws std::invalid_argument with a line number on malformed input.
SatInstance read_wcnf(std::string_view text);

}  // namespace seqdict

#endif  // SEQDICT_WCNF_HPP_
