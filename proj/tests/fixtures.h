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

// Small hand-written worlds shared by several suites.

#ifndef TSE_TESTS_FIXTURES_H_
#define TSE_TESTS_FIXTURES_H_

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "tse/corpus.h"
#include "tse/mock_lm.h"
#include "temp_dir.h"

namespace tse_test {

// Two animal and two city templates plus a neutral one.
inline tse::MockWorld TinyWorld() {
  return tse::MockWorld::FromJson(nlohmann::json::parse(R"({
    "model_id": "tiny",
    "smoothing": 0.01,
    "vocab": ["table", "idea", "blue"],
    "categories": [
      {"name": "animal", "members": ["dog", "cat", "horse", "cow"],
       "weights": [4, 3, 2, 1]},
      {"name": "city", "members": ["paris", "rome", "oslo", "new york"]}
    ],
    "templates": [
      {"text": "my pet [MASK] sleeps .", "categories": {"animal": 1.0}},
      {"text": "the [MASK] ate grass .", "categories": {"animal": 1.0},
       "terms": {"cow": 3.0}},
      {"text": "we flew to [MASK] today .", "categories": {"city": 1.0}},
      {"text": "i saw a [MASK] .", "categories": {"animal": 0.5, "city": 0.2},
       "terms": {"table": 2.0}}
    ]
  })"));
}

inline std::vector<std::string> TinyCorpusLines() {
  return {"My pet dog sleeps .",    "My pet cat sleeps .",  "The horse ate grass .",
          "The cow ate grass .",    "The dog ate grass .",  "We flew to Paris today .",
          "We flew to New York today .", "I saw a dog .",   "I saw a cat .",
          "The table is blue .",    "I saw a horse .",      "My pet horse sleeps ."};
}

inline tse::CorpusIndex IndexFromLines(const std::vector<std::string>& lines) {
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  std::istringstream in(text);
  return tse::CorpusIndex::Build(in);
}

inline tse::CorpusIndex TinyCorpus() { return IndexFromLines(TinyCorpusLines()); }

}  // namespace tse_test

#endif  // TSE_TESTS_FIXTURES_H_
