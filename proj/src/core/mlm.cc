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

#include "tse/mlm.h"

#include "tse/error.h"

namespace tse {

bool CompletionBefore(const CompletionEntry& a, const CompletionEntry& b) {
  if (a.logprob != b.logprob) return a.logprob > b.logprob;
  return a.term < b.term;
}

void RankLookup::Set(std::string term, std::optional<TermRank> rank) {
  entries_.insert_or_assign(std::move(term), rank);
}

bool RankLookup::requested(std::string_view term) const {
  return entries_.find(term) != entries_.end();
}

std::optional<TermRank> RankLookup::Find(std::string_view term) const {
  auto it = entries_.find(term);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kValidation,
                "term was not requested as a term of interest: '" +
                    std::string(term) + "'");
  }
  return it->second;
}

std::optional<std::size_t> RankLookup::RankOf(std::string_view term) const {
  const auto found = Find(term);
  if (!found) return std::nullopt;
  return found->rank;
}

bool MlmBackend::SupportsFullDistribution() const {
  const BackendInfo info = Info();
  return info.max_top_q == 0 || info.max_top_q >= info.vocab_size;
}

void ValidateRequest(const BackendInfo& info, const MaskedPattern& pattern,
                     std::size_t top_q) {
  if (top_q == 0) {
    throw Error(ErrorCode::kValidation, "top_q must be at least 1");
  }
  if (info.max_context != 0 && pattern.size() > info.max_context) {
    throw Error(ErrorCode::kTruncation,
                "pattern has " + std::to_string(pattern.size()) +
                    " tokens; backend context limit is " +
                    std::to_string(info.max_context));
  }
  if (info.max_top_q != 0 && top_q > info.max_top_q &&
      info.max_top_q < info.vocab_size) {
    throw Error(ErrorCode::kCapability,
                "backend serves at most top_q=" +
                    std::to_string(info.max_top_q) + " (requested " +
                    std::to_string(top_q) + ")");
  }
}

std::size_t RequireRank(const Completion& completion, std::string_view term) {
  const auto rank = completion.lookup.RankOf(term);
  if (!rank) {
    throw Error(ErrorCode::kOovSeed,
                "seed term is not in the LM vocabulary: '" + std::string(term) +
                    "'");
  }
  return *rank;
}

}  // namespace tse
