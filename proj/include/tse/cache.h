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

#ifndef TSE_CACHE_H_
#define TSE_CACHE_H_

#include <atomic>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "tse/mlm.h"

namespace tse {

// Memoizes Complete() keyed by (backend id, tokens, mask index, top_q,
// terms of interest). With a path, entries are loaded at construction and
// every new entry is appended as one JSON line. Reads take a shared lock;
// inserts and file appends are serialized.
class CachingBackend final : public MlmBackend {
 public:
  explicit CachingBackend(std::shared_ptr<const MlmBackend> inner,
                          std::optional<std::string> path = std::nullopt);

  BackendInfo Info() const override { return info_; }
  Completion Complete(
      const MaskedPattern& pattern, std::size_t top_q,
      const std::vector<std::string>& terms_of_interest) const override;
  bool Contains(std::string_view term) const override;
  std::string id() const override { return id_; }

  std::size_t hits() const;
  std::size_t misses() const;
  std::size_t size() const;

 private:
  std::string Key(const MaskedPattern& pattern, std::size_t top_q,
                  const std::vector<std::string>& terms) const;

  std::shared_ptr<const MlmBackend> inner_;
  BackendInfo info_;
  std::string id_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const Completion>> entries_;
  mutable std::ofstream log_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace tse

#endif  // TSE_CACHE_H_
