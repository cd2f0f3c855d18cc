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

#ifndef SEQDICT_VALUE_HPP_
#define SEQDICT_VALUE_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace seqdict {

// Exact rational used for every valuation, weight and welfare figure.
// Note: arithmetic on mpq_class yields expression templates, so spell out
// `Value x = a + b;` instead of `auto`.
using Value = mpq_class;

// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
// malformed text or a zero denominator. The result is canonical.
Value parse_rational(std::string_view text);

// Always emits "p/q", including "3/1" for integers.
std::string format_rational(const Value& value);

// Fixed-point decimal rendering for human-readable reports.
std::string format_decimal(const Value& value, int digits = 6);

inline Value make_value(long numerator, unsigned long denominator = 1) {
  Value v(numerator, denominator);
  v.canonicalize();
  return v;
}

}  // namespace seqdict

#endif  // SEQDICT_VALUE_HPP_
