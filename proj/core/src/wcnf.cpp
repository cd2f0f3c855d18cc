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

#include "seqdict/wcnf.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace seqdict {

std::string write_wcnf(const SatInstance& inst) {
  std::ostringstream out;
  out << "c tie_default";
  for (bool b : inst.tie_default) out << ' ' << (b ? 1 : 0);
  out << "\np wcnf " << inst.n << ' ' << inst.clauses.size() << '\n';
  for (const Clause& c : inst.clauses) {
    out << format_rational(c.weight);
    for (Literal lit : c.literals) out << ' ' << lit;
    out << " 0\n";
  }
  return out.str();
}

SatInstance read_wcnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::size_t expected = 0;
  std::optional<std::vector<bool>> ties;
  std::vector<Clause> clauses;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("wcnf line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tok(line);
    std::string head;
    if (!(tok >> head)) continue;
    if (head == "c") {
      std::string key;
      if (tok >> key && key == "tie_default") {
        ties.emplace();
        int b;
        while (tok >> b) {
          if (b != 0 && b != 1) fail("tie_default entries must be 0 or 1");
          ties->push_back(b == 1);
        }
      }
      continue;
    }
    if (head == "p") {
      std::string fmt;
      std::size_t vars = 0;
      if (n || !(tok >> fmt >> vars >> expected) || fmt != "wcnf") fail("bad problem line");
      n = vars;
      continue;
    }
    if (!n) fail("clause before problem line");
    Clause c;
    try {
      c.weight = parse_rational(head);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    long lit = 0;
    bool terminated = false;
    while (tok >> lit) {
      if (lit == 0) {
        terminated = true;
        break;
      }
      if (lit > 1000000000L || lit < -1000000000L) fail("literal out of range");
      c.literals.push_back(static_cast<Literal>(lit));
    }
    if (!terminated) fail("clause must end with 0");
    clauses.push_back(std::move(c));
  }
  if (!n) throw std::invalid_argument("wcnf: missing problem line");
  if (clauses.size() != expected) throw std::invalid_argument("wcnf: clause count mismatch");
  return SatInstance::make(*n, std::move(clauses), std::move(ties));
}

}  // namespace seqdict
