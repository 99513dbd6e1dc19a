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

#include "tse/expansion.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "tse/error.h"

namespace tse {

std::vector<std::string> Expansion::Terms() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.term);
  return out;
}

void RankAndTruncate(std::vector<ExpansionEntry>& entries, std::size_t top_n) {
  auto before = [](const ExpansionEntry& a, const ExpansionEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.term < b.term;
  };
  if (top_n < entries.size()) {
    std::partial_sort(entries.begin(), entries.begin() + top_n, entries.end(), before);
    entries.resize(top_n);
  } else {
    std::sort(entries.begin(), entries.end(), before);
  }
}

void WriteExpansionJsonl(std::ostream& out, const Expansion& expansion,
                         const nlohmann::json& config) {
  nlohmann::json meta{{"method", expansion.method},
                      {"count", expansion.entries.size()},
                      {"metadata", expansion.metadata},
                      {"config", config}};
  out << nlohmann::json{{"meta", meta}}.dump() << '\n';
  for (std::size_t i = 0; i < expansion.entries.size(); ++i) {
    const auto& e = expansion.entries[i];
    out << nlohmann::json{{"rank", i + 1}, {"term", e.term}, {"score", e.score}}.dump()
        << '\n';
  }
}

Expansion ReadExpansionJsonl(std::istream& in) {
  Expansion expansion;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorCode::kIo,
                  "expansion line " + std::to_string(line_no) + ": not JSON");
    }
    if (j.contains("meta")) {
      expansion.method = j["meta"].value("method", "");
      expansion.metadata = j["meta"].value("metadata", nlohmann::json::object());
      continue;
    }
    try {
      expansion.entries.push_back(
          {j.at("term").get<std::string>(), j.at("score").get<double>()});
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kIo,
                  "expansion line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return expansion;
}

}  // namespace tse
