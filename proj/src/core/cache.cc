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

#include "tse/cache.h"

#include "nlohmann/json.hpp"
#include "tse/error.h"
#include "tse/wire.h"

namespace tse {

CachingBackend::CachingBackend(std::shared_ptr<const MlmBackend> inner,
                               std::optional<std::string> path)
    : inner_(std::move(inner)), info_(inner_->Info()), id_(inner_->id()) {
  if (!path) return;
  {
    std::ifstream in(*path);
    std::string line;
    std::size_t line_no = 0;
    while (in && std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("key") || !j.contains("response")) {
        throw Error(ErrorCode::kIo, "corrupt cache file " + *path + " at line " +
                                        std::to_string(line_no));
      }
      // Entries of other backends share the file but never match our keys.
      entries_.insert_or_assign(
          j["key"].get<std::string>(),
          std::make_shared<const Completion>(wire::CompletionFromJson(j["response"])));
    }
  }
  log_.open(*path, std::ios::app);
  if (!log_) throw Error(ErrorCode::kIo, "cannot open cache file: " + *path);
}

std::string CachingBackend::Key(const MaskedPattern& pattern, std::size_t top_q,
                                const std::vector<std::string>& terms) const {
  return nlohmann::json::array({id_, pattern.tokens(), pattern.mask_index(), top_q,
                                terms})
      .dump();
}

Completion CachingBackend::Complete(
    const MaskedPattern& pattern, std::size_t top_q,
    const std::vector<std::string>& terms_of_interest) const {
  const std::string key = Key(pattern, top_q, terms_of_interest);
  {
    std::shared_lock lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      ++hits_;
      return *it->second;
    }
  }
  auto fresh = std::make_shared<const Completion>(
      inner_->Complete(pattern, top_q, terms_of_interest));
  std::unique_lock lock(mu_);
  ++misses_;
  auto [it, inserted] = entries_.emplace(key, fresh);
  if (inserted && log_.is_open()) {
    log_ << nlohmann::json{{"key", key}, {"response", wire::CompletionToJson(*fresh)}}
                .dump()
         << '\n';
    log_.flush();
  }
  return *it->second;
}

bool CachingBackend::Contains(std::string_view term) const {
  return inner_->Contains(term);
}

std::size_t CachingBackend::hits() const { return hits_; }

std::size_t CachingBackend::misses() const { return misses_; }

std::size_t CachingBackend::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace tse
