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

#include "tse/pattern.h"

#include <algorithm>

#include "tse/error.h"

namespace tse {

MaskedPattern::MaskedPattern(std::vector<std::string> tokens,
                             std::size_t mask_index)
    : tokens_(std::move(tokens)), mask_index_(mask_index) {
  if (mask_index_ >= tokens_.size() || tokens_[mask_index_] != kMaskToken) {
    throw Error(ErrorCode::kValidation,
                "masked pattern: mask_index does not point at the mask symbol");
  }
  if (std::count(tokens_.begin(), tokens_.end(), kMaskToken) != 1) {
    throw Error(ErrorCode::kValidation,
                "masked pattern: expected exactly one mask symbol");
  }
}

MaskedPattern MaskedPattern::FromText(std::string_view text,
                                      const TokenizerConfig& config) {
  std::vector<std::string> tokens;
  std::size_t mask_index = 0;
  std::size_t masks = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = text.find(kMaskToken, pos);
    const std::string_view chunk =
        text.substr(pos, hit == std::string_view::npos ? hit : hit - pos);
    for (auto& token : TokenStrings(chunk, config)) {
      tokens.push_back(std::move(token));
    }
    if (hit == std::string_view::npos) break;
    mask_index = tokens.size();
    tokens.emplace_back(kMaskToken);
    ++masks;
    pos = hit + kMaskToken.size();
  }
  if (masks != 1) {
    throw Error(ErrorCode::kValidation,
                "pattern text must contain exactly one [MASK]: '" +
                    std::string(text) + "'");
  }
  return MaskedPattern(std::move(tokens), mask_index);
}

std::vector<std::string> MaskedPattern::Unmask(
    const std::vector<std::string>& fill) const {
  std::vector<std::string> out(tokens_.begin(), tokens_.begin() + mask_index_);
  out.insert(out.end(), fill.begin(), fill.end());
  out.insert(out.end(), tokens_.begin() + mask_index_ + 1, tokens_.end());
  return out;
}

}  // namespace tse
