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

#ifndef TSE_TEXT_H_
#define TSE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tse {

// The single mask symbol used in masked patterns. The tokenizer splits '['
// and ']' as punctuation, so corpus text can never produce this token.
inline constexpr std::string_view kMaskToken = "[MASK]";

struct TokenizerConfig {
  bool lowercase = true;
};

struct Token {
  std::string text;
  std::size_t begin = 0;  // byte offset into the raw sentence
  std::size_t end = 0;
};

// Splits on ASCII whitespace; every ASCII punctuation character becomes a
// token of its own. Bytes >= 0x80 are treated as word characters so UTF-8
// sequences stay intact. Lowercasing is ASCII-only.
std::vector<Token> Tokenize(std::string_view text,
                            const TokenizerConfig& config = {});

std::vector<std::string> TokenStrings(std::string_view text,
                                      const TokenizerConfig& config = {});

// Canonical form of a term: its tokens joined by single spaces.
std::string NormalizeTerm(std::string_view term,
                          const TokenizerConfig& config = {});

std::string JoinTokens(const std::vector<std::string>& tokens);

}  // namespace tse

#endif  // TSE_TEXT_H_
