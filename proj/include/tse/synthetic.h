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

#ifndef TSE_SYNTHETIC_H_
#define TSE_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "tse/candidates.h"
#include "tse/eval.h"
#include "tse/mock_lm.h"

namespace tse {

// Shape of a generated test world. Every category gets its own indicative
// templates; ambiguous templates mix two categories, generic ones accept any
// member, and distractor templates are filled with members in the corpus
// while the LM prefers unrelated words in their slot.
struct SynthOptions {
  std::size_t categories = 5;
  std::size_t members = 30;
  // Every third member of the last category is a two-word term.
  bool multiword_last = true;
  std::size_t indicative_templates = 10;  // per category
  std::size_t fill_per_template = 12;     // members placed in each template
  std::size_t generic_templates = 8;
  double noise_level = 1.0;  // distractor templates per category = 5 * level
  std::size_t noise_words = 200;
  // Noise sentences pad the template sentences up to this count.
  std::size_t total_sentences = 2000;
  std::size_t dim = 32;
  std::uint64_t seed = 7;
};

struct SyntheticWorld {
  MockWorld world;
  std::vector<std::string> corpus;  // one sentence per line
  std::vector<GoldSet> gold;        // one per category
  EmbeddingTable embeddings;
  // Categories whose members are all single tokens.
  std::vector<std::size_t> single_token_categories;
};

SyntheticWorld GenerateSyntheticWorld(const SynthOptions& options = {});

// Writes world.json, corpus.txt, embeddings.txt and gold/<name>.txt.
void WriteSyntheticWorld(const SyntheticWorld& world, const std::string& dir);

// Gold file text for one set.
std::string GoldSetText(const GoldSet& gold);

}  // namespace tse

#endif  // TSE_SYNTHETIC_H_
