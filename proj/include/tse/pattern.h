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

#ifndef TSE_PATTERN_H_
#define TSE_PATTERN_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tse/text.h"

namespace tse {

// A token sequence with exactly one masked location. The mask may stand for
// a multi-word span in the source sentence; at the LM layer it is always one
// vocabulary unit.
class MaskedPattern {
 public:
  MaskedPattern() = default;
  // Throws Error(kValidation) unless tokens[mask_index] is the only mask.
  MaskedPattern(std::vector<std::string> tokens, std::size_t mask_index);

  // Parses "the capital of [MASK] is paris"; the text is tokenized with
  // `config` and the literal "[MASK]" marker is kept as the mask.
  static MaskedPattern FromText(std::string_view text,
                                const TokenizerConfig& config = {});

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t mask_index() const { return mask_index_; }
  std::size_t size() const { return tokens_.size(); }

  // A pattern that is nothing but the mask carries no context.
  bool degenerate() const { return tokens_.size() == 1; }

  std::string Text() const { return JoinTokens(tokens_); }

  // Replaces the mask with `fill`, reproducing the source token sequence.
  std::vector<std::string> Unmask(const std::vector<std::string>& fill) const;

  friend bool operator==(const MaskedPattern&, const MaskedPattern&) = default;
  friend auto operator<=>(const MaskedPattern&, const MaskedPattern&) = default;

 private:
  std::vector<std::string> tokens_;
  std::size_t mask_index_ = 0;
};

}  // namespace tse

#endif  // TSE_PATTERN_H_
