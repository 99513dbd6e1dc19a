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

#ifndef TSE_EVAL_H_
#define TSE_EVAL_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tse/expansion.h"
#include "tse/text.h"

namespace tse {

// The gold class. Each line of the file is one member: its surface forms
// separated by tabs. Lines starting with '#' are comments, except the
// directive "#@ open" which marks an open class (scored with MAP@70).
class GoldSet {
 public:
  GoldSet() = default;
  // Throws Error(kValidation) when two groups share a normalized form.
  GoldSet(std::string name, std::vector<std::vector<std::string>> groups,
          bool open = false, const TokenizerConfig& tokenizer = {});

  static GoldSet Parse(std::istream& in, std::string name,
                       const TokenizerConfig& tokenizer = {});
  static GoldSet LoadFile(const std::string& path,
                          const TokenizerConfig& tokenizer = {});

  const std::string& name() const { return name_; }
  bool open() const { return open_; }
  std::size_t size() const { return surface_.size(); }
  bool empty() const { return surface_.empty(); }
  // Surface forms of group g as written in the file.
  const std::vector<std::string>& surface(std::size_t g) const { return surface_[g]; }
  // The normalized first form of every group.
  std::vector<std::string> Representatives() const;
  // Every normalized form of every group.
  std::vector<std::string> AllForms() const;
  std::optional<std::size_t> GroupOf(std::string_view term) const;
  const TokenizerConfig& tokenizer() const { return tokenizer_; }

 private:
  std::string name_;
  bool open_ = false;
  std::vector<std::vector<std::string>> surface_;
  std::vector<std::string> first_normalized_;
  std::unordered_map<std::string, std::size_t> group_of_;
  TokenizerConfig tokenizer_;
};

inline constexpr std::size_t kOpenSetCutoff = 70;

// AP = sum over credited hits of precision@i / min(|gold|, cutoff), computed
// on the first `cutoff` predictions. Each group is credited at most once.
// Throws Error(kUndefinedMetric) for an empty gold set and
// Error(kValidation) for an empty ranking.
double AveragePrecision(const std::vector<std::string>& ranking, const GoldSet& gold,
                        std::optional<std::size_t> cutoff = std::nullopt);
double AveragePrecision(const Expansion& expansion, const GoldSet& gold,
                        std::optional<std::size_t> cutoff = std::nullopt);

}  // namespace tse

#endif  // TSE_EVAL_H_
