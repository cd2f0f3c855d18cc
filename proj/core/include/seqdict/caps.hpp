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

#ifndef SEQDICT_CAPS_HPP_
#define SEQDICT_CAPS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seqdict {

// Size limits for the exhaustive enumerations. Exceeding one is an error,
// never a silent truncation.
struct EnumerationCaps {
  std::size_t permutation = 10;  // loops over n! sequences or matchings
  std::size_t subset = 20;       // loops over 2^n subsets or assignments
  std::size_t monotone = 6;      // all ordered-subsequence pairs per agent
  std::size_t tree = 8;          // arborescence and path-union enumeration

  // "permutation=9,subset=16,monotone=5,tree=7"; omitted keys keep defaults.
  static EnumerationCaps parse(std::string_view text);
  // Reads SEQDICT_CAPS, falling back to the defaults when unset.
  static EnumerationCaps from_environment();

  std::string to_string() const;

  friend bool operator==(const EnumerationCaps&, const EnumerationCaps&) = default;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what)
      : std::runtime_error("enumeration cap exceeded: " + what) {}
};

// Throws CapExceeded when size > cap.
void require_within_cap(std::size_t size, std::size_t cap, std::string_view what);

}  // namespace seqdict

#endif  // SEQDICT_CAPS_HPP_
