/*
 * Copyright 2026 The TSE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TSE_EXPANSION_H_
#define TSE_EXPANSION_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

namespace tse {

struct ExpansionEntry {
  std::string term;
  double score = 0.0;

  friend bool operator==(const ExpansionEntry&, const ExpansionEntry&) = default;
};

// A ranked list of (term, score): scores non-increasing, ties by term, no
// duplicate terms.
struct Expansion {
  std::string method;
  std::vector<ExpansionEntry> entries;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t size() const { return entries.size(); }
  std::vector<std::string> Terms() const;
};

// Sorts by (score desc, term asc) and keeps the first top_n entries.
void RankAndTruncate(std::vector<ExpansionEntry>& entries, std::size_t top_n);

// JSON lines: {"meta": {...}} then {"rank", "term", "score"} per entry.
// `config` is embedded in the meta record next to the method and metadata.
void WriteExpansionJsonl(std::ostream& out, const Expansion& expansion,
                         const nlohmann::json& config);
Expansion ReadExpansionJsonl(std::istream& in);

}  // namespace tse

#endif  // TSE_EXPANSION_H_
