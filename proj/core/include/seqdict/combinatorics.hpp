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

#ifndef SEQDICT_COMBINATORICS_HPP_
#define SEQDICT_COMBINATORICS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace seqdict {

constexpr std::uint64_t factorial(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  return r;
}

constexpr std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// n! / (n-k)!
constexpr std::uint64_t falling_factorial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

// Advances a sorted k-combination of [0, n) to its lexicographic successor.
// Returns false after the last combination.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Calls visit on every k-combination of [0, n) in lexicographic order.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  do {
    visit(comb);
  } while (next_combination(comb, n));
}

}  // namespace seqdict

#endif  // SEQDICT_COMBINATORICS_HPP_
