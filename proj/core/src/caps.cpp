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

#include "seqdict/caps.hpp"

#include <charconv>
#include <cstdlib>

namespace seqdict {

EnumerationCaps EnumerationCaps::parse(std::string_view text) {
  EnumerationCaps caps;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("caps entry needs key=value: '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    std::size_t parsed = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), parsed);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw std::invalid_argument("caps value is not an integer: '" + std::string(item) + "'");
    }
    if (key == "permutation") {
      caps.permutation = parsed;
    } else if (key == "subset") {
      caps.subset = parsed;
    } else if (key == "monotone") {
      caps.monotone = parsed;
    } else if (key == "tree") {
      caps.tree = parsed;
    } else {
      throw std::invalid_argument("unknown caps key: '" + std::string(key) + "'");
    }
  }
  return caps;
}

EnumerationCaps EnumerationCaps::from_environment() {
  const char* env = std::getenv("SEQDICT_CAPS");
  if (env == nullptr) return EnumerationCaps{};
  return parse(env);
}

std::string EnumerationCaps::to_string() const {
  return "permutation=" + std::to_string(permutation) + ",subset=" + std::to_string(subset) +
         ",monotone=" + std::to_string(monotone) + ",tree=" + std::to_string(tree);
}

void require_within_cap(std::size_t size, std::size_t cap, std::string_view what) {
  if (size > cap) {
    throw CapExceeded(std::string(what) + " size " + std::to_string(size) + " > cap " +
                      std::to_string(cap));
  }
}

}  // namespace seqdict
