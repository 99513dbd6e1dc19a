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

#include "tse/text.h"

namespace tse {
namespace {

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsPunct(unsigned char c) {
  return c < 0x80 && ((c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
                      (c >= '[' && c <= '`') || (c >= '{' && c <= '~'));
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text,
                            const TokenizerConfig& config) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    Token token;
    token.begin = i;
    if (IsPunct(c)) {
      ++i;
    } else {
      while (i < n) {
        const auto d = static_cast<unsigned char>(text[i]);
        if (IsSpace(d) || IsPunct(d)) break;
        ++i;
      }
    }
    token.end = i;
    token.text.assign(text.substr(token.begin, token.end - token.begin));
    if (config.lowercase) {
      for (char& ch : token.text) {
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
      }
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<std::string> TokenStrings(std::string_view text,
                                      const TokenizerConfig& config) {
  std::vector<std::string> out;
  for (auto& token : Tokenize(text, config)) out.push_back(std::move(token.text));
  return out;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string NormalizeTerm(std::string_view term, const TokenizerConfig& config) {
  return JoinTokens(TokenStrings(term, config));
}

}  // namespace tse
