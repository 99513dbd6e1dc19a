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

#ifndef TSE_CORPUS_H_
#define TSE_CORPUS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tse/pattern.h"
#include "tse/text.h"

namespace tse {

struct Sentence {
  std::uint32_t id = 0;
  std::string raw;
  std::vector<Token> tokens;
};

struct Posting {
  std::uint32_t sentence = 0;
  std::uint32_t position = 0;

  friend auto operator<=>(const Posting&, const Posting&) = default;
};

// One occurrence of a term: tokens [begin, end) of a sentence.
struct Occurrence {
  std::uint32_t sentence = 0;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

inline constexpr std::size_t kAllOccurrences =
    std::numeric_limits<std::size_t>::max();

// Immutable sentence store plus a positional inverted index. One input line
// is one sentence; empty lines keep their id so ids match line numbers.
// All const member functions are safe to call concurrently.
class CorpusIndex {
 public:
  // Throws Error(kIo) naming the line for unreadable or non-UTF-8 input and
  // Error(kEmptyCorpus) when no line contains a token.
  static CorpusIndex Build(std::istream& source,
                           const TokenizerConfig& config = {});
  static CorpusIndex BuildFromFile(const std::string& path,
                                   const TokenizerConfig& config = {});

  // Line-oriented persistence with a version header.
  void Save(const std::string& path) const;
  void Save(std::ostream& out) const;
  static CorpusIndex Load(const std::string& path);
  static CorpusIndex Load(std::istream& in);

  std::size_t sentence_count() const { return sentences_.size(); }
  std::size_t token_count() const { return token_count_; }
  std::size_t type_count() const { return postings_.size(); }
  const TokenizerConfig& config() const { return config_; }

  const Sentence& sentence(std::uint32_t id) const;
  std::vector<std::string> SentenceTokens(std::uint32_t id) const;

  std::span<const Posting> postings(std::string_view token) const;
  // Number of sentences containing the token.
  std::size_t document_frequency(std::string_view token) const;

  // Occurrences of the (possibly multi-word) term as a contiguous token run,
  // in (sentence, position) order. Overlapping runs are all reported.
  std::vector<Occurrence> FindOccurrences(
      std::string_view term, std::size_t max_n = kAllOccurrences) const;
  std::vector<Occurrence> FindOccurrences(
      const std::vector<std::string>& term_tokens,
      std::size_t max_n = kAllOccurrences) const;

  // Replaces the occurrence span with a single mask symbol. Throws
  // Error(kInvalidOccurrence) when the span is out of bounds or empty.
  MaskedPattern Mask(const Occurrence& occurrence) const;

 private:
  void AddSentence(std::string raw);

  TokenizerConfig config_;
  std::vector<Sentence> sentences_;
  std::unordered_map<std::string, std::vector<Posting>> postings_;
  std::size_t token_count_ = 0;
};

}  // namespace tse

#endif  // TSE_CORPUS_H_
