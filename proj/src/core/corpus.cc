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

#include "tse/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "tse/error.h"

namespace tse {
namespace {

constexpr std::string_view kIndexMagic = "tse-corpus-index";
constexpr int kIndexVersion = 1;

bool IsValidUtf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

}  // namespace

void CorpusIndex::AddSentence(std::string raw) {
  Sentence sentence;
  sentence.id = static_cast<std::uint32_t>(sentences_.size());
  sentence.tokens = Tokenize(raw, config_);
  sentence.raw = std::move(raw);
  for (std::size_t pos = 0; pos < sentence.tokens.size(); ++pos) {
    postings_[sentence.tokens[pos].text].push_back(
        {sentence.id, static_cast<std::uint32_t>(pos)});
  }
  token_count_ += sentence.tokens.size();
  sentences_.push_back(std::move(sentence));
}

CorpusIndex CorpusIndex::Build(std::istream& source,
                               const TokenizerConfig& config) {
  CorpusIndex index;
  index.config_ = config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!IsValidUtf8(line)) {
      throw Error(ErrorCode::kIo, "corpus line " + std::to_string(line_no) +
                                      ": invalid UTF-8");
    }
    index.AddSentence(std::move(line));
  }
  if (source.bad()) {
    throw Error(ErrorCode::kIo, "corpus read failed after line " +
                                    std::to_string(line_no));
  }
  if (index.token_count_ == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus contains no tokens");
  }
  return index;
}

CorpusIndex CorpusIndex::BuildFromFile(const std::string& path,
                                       const TokenizerConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open corpus: " + path);
  return Build(in, config);
}

void CorpusIndex::Save(std::ostream& out) const {
  out << kIndexMagic << ' ' << kIndexVersion << '\n';
  out << "lowercase " << (config_.lowercase ? 1 : 0) << '\n';
  out << "sentences " << sentences_.size() << " tokens " << token_count_
      << " types " << postings_.size() << '\n';
  for (const auto& sentence : sentences_) out << sentence.raw << '\n';
}

void CorpusIndex::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write index: " + path);
  Save(out);
  if (!out) throw Error(ErrorCode::kIo, "short write on index: " + path);
}

CorpusIndex CorpusIndex::Load(std::istream& in) {
  std::string magic, key;
  int version = 0;
  int lowercase = 1;
  std::size_t sentences = 0, tokens = 0, types = 0;
  std::string tokens_key, types_key;
  std::string line;
  auto corrupt = [](const std::string& what) {
    return Error(ErrorCode::kIo, "corrupt index file: " + what);
  };
  if (!std::getline(in, line)) throw corrupt("missing header");
  {
    std::istringstream header(line);
    if (!(header >> magic >> version) || magic != kIndexMagic) {
      throw corrupt("bad magic");
    }
    if (version != kIndexVersion) {
      throw corrupt("unsupported version " + std::to_string(version));
    }
  }
  if (!std::getline(in, line)) throw corrupt("missing tokenizer line");
  {
    std::istringstream cfg(line);
    if (!(cfg >> key >> lowercase) || key != "lowercase") {
      throw corrupt("bad tokenizer line");
    }
  }
  if (!std::getline(in, line)) throw corrupt("missing counts line");
  {
    std::istringstream counts(line);
    if (!(counts >> key >> sentences >> tokens_key >> tokens >> types_key >>
          types) ||
        key != "sentences" || tokens_key != "tokens" || types_key != "types") {
      throw corrupt("bad counts line");
    }
  }
  CorpusIndex index;
  index.config_.lowercase = lowercase != 0;
  index.sentences_.reserve(sentences);
  for (std::size_t i = 0; i < sentences; ++i) {
    if (!std::getline(in, line)) throw corrupt("truncated sentence block");
    index.AddSentence(std::move(line));
  }
  if (index.token_count_ != tokens || index.postings_.size() != types) {
    throw corrupt("token counts do not match header");
  }
  return index;
}

CorpusIndex CorpusIndex::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open index: " + path);
  return Load(in);
}

const Sentence& CorpusIndex::sentence(std::uint32_t id) const {
  if (id >= sentences_.size()) {
    throw Error(ErrorCode::kInvalidOccurrence,
                "sentence id out of range: " + std::to_string(id));
  }
  return sentences_[id];
}

std::vector<std::string> CorpusIndex::SentenceTokens(std::uint32_t id) const {
  std::vector<std::string> out;
  for (const auto& token : sentence(id).tokens) out.push_back(token.text);
  return out;
}

std::span<const Posting> CorpusIndex::postings(std::string_view token) const {
  auto it = postings_.find(std::string(token));
  if (it == postings_.end()) return {};
  return it->second;
}

std::size_t CorpusIndex::document_frequency(std::string_view token) const {
  std::size_t df = 0;
  std::uint32_t last = 0;
  bool first = true;
  for (const auto& p : postings(token)) {
    if (first || p.sentence != last) ++df;
    last = p.sentence;
    first = false;
  }
  return df;
}

std::vector<Occurrence> CorpusIndex::FindOccurrences(std::string_view term,
                                                     std::size_t max_n) const {
  return FindOccurrences(TokenStrings(term, config_), max_n);
}

std::vector<Occurrence> CorpusIndex::FindOccurrences(
    const std::vector<std::string>& term_tokens, std::size_t max_n) const {
  if (term_tokens.empty()) {
    throw Error(ErrorCode::kValidation, "term is empty after normalization");
  }
  std::vector<Occurrence> out;
  if (max_n == 0) return out;
  // Anchor on the rarest token of the term to keep the scan short.
  std::size_t anchor = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < term_tokens.size(); ++i) {
    const std::size_t n = postings(term_tokens[i]).size();
    if (n < best) {
      best = n;
      anchor = i;
    }
  }
  for (const auto& p : postings(term_tokens[anchor])) {
    if (p.position < anchor) continue;
    const std::uint32_t start = p.position - static_cast<std::uint32_t>(anchor);
    const auto& tokens = sentences_[p.sentence].tokens;
    if (start + term_tokens.size() > tokens.size()) continue;
    bool match = true;
    for (std::size_t k = 0; k < term_tokens.size() && match; ++k) {
      match = tokens[start + k].text == term_tokens[k];
    }
    if (!match) continue;
    out.push_back({p.sentence, start,
                   start + static_cast<std::uint32_t>(term_tokens.size())});
    if (out.size() == max_n) break;
  }
  return out;
}

MaskedPattern CorpusIndex::Mask(const Occurrence& occurrence) const {
  if (occurrence.sentence >= sentences_.size()) {
    throw Error(ErrorCode::kInvalidOccurrence,
                "occurrence sentence id out of range");
  }
  const auto& tokens = sentences_[occurrence.sentence].tokens;
  if (occurrence.begin >= occurrence.end || occurrence.end > tokens.size()) {
    throw Error(ErrorCode::kInvalidOccurrence,
                "occurrence span out of bounds for sentence " +
                    std::to_string(occurrence.sentence));
  }
  std::vector<std::string> masked;
  masked.reserve(tokens.size() - (occurrence.end - occurrence.begin) + 1);
  for (std::uint32_t i = 0; i < occurrence.begin; ++i) {
    masked.push_back(tokens[i].text);
  }
  masked.emplace_back(kMaskToken);
  for (std::size_t i = occurrence.end; i < tokens.size(); ++i) {
    masked.push_back(tokens[i].text);
  }
  return MaskedPattern(std::move(masked), occurrence.begin);
}

}  // namespace tse
