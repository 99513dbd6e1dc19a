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

#ifndef TSE_MLM_H_
#define TSE_MLM_H_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tse/pattern.h"

namespace tse {

struct CompletionEntry {
  std::string term;
  double logprob = 0.0;  // natural log

  friend bool operator==(const CompletionEntry&,
                         const CompletionEntry&) = default;
};

// Completion order: logprob descending, ties by term ascending.
bool CompletionBefore(const CompletionEntry& a, const CompletionEntry& b);

struct TermRank {
  std::size_t rank = 0;  // 1-based; 1 is the most probable completion
  double logprob = 0.0;

  friend bool operator==(const TermRank&, const TermRank&) = default;
};

// Ranks of the requested terms of interest. A missing value marks a term that
// is not a single vocabulary unit of the backend.
class RankLookup {
 public:
  void Set(std::string term, std::optional<TermRank> rank);

  bool requested(std::string_view term) const;
  // nullopt means out-of-vocabulary. Throws Error(kValidation) if the term
  // was not among the terms of interest.
  std::optional<TermRank> Find(std::string_view term) const;
  std::optional<std::size_t> RankOf(std::string_view term) const;

  const std::map<std::string, std::optional<TermRank>, std::less<>>& entries()
      const {
    return entries_;
  }

  friend bool operator==(const RankLookup&, const RankLookup&) = default;

 private:
  std::map<std::string, std::optional<TermRank>, std::less<>> entries_;
};

// LM(m) truncated to the requested top-q, plus exact ranks for the terms of
// interest.
struct Completion {
  std::vector<CompletionEntry> top;
  std::size_t vocab_size = 0;
  RankLookup lookup;

  friend bool operator==(const Completion&, const Completion&) = default;
};

struct BackendInfo {
  std::string model_id;
  std::size_t vocab_size = 0;
  std::size_t max_context = 0;
  // Largest top_q the backend will serve; 0 means the full vocabulary.
  std::size_t max_top_q = 0;
};

// Masked-LM completion capability. Implementations are deterministic and
// safe to call from several threads at once.
class MlmBackend {
 public:
  virtual ~MlmBackend() = default;

  virtual BackendInfo Info() const = 0;

  // Throws Error(kTruncation) when the pattern exceeds the context limit,
  // Error(kCapability) when top_q exceeds max_top_q and Error(kTransport)
  // for unreachable remote backends.
  virtual Completion Complete(
      const MaskedPattern& pattern, std::size_t top_q,
      const std::vector<std::string>& terms_of_interest) const = 0;

  virtual bool Contains(std::string_view term) const = 0;

  // Identifier used in cache keys; defaults to the model id.
  virtual std::string id() const { return Info().model_id; }

  bool SupportsFullDistribution() const;
};

// Checks shared by every backend before answering a request.
void ValidateRequest(const BackendInfo& info, const MaskedPattern& pattern,
                     std::size_t top_q);

// Rank of a seed term, or Error(kOovSeed) naming it.
std::size_t RequireRank(const Completion& completion, std::string_view term);

}  // namespace tse

#endif  // TSE_MLM_H_
