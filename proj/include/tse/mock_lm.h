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

#ifndef TSE_MOCK_LM_H_
#define TSE_MOCK_LM_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nlohmann/json.hpp"
#include "tse/mlm.h"

namespace tse {

struct MockCategory {
  std::string name;
  std::vector<std::string> members;
  std::vector<double> weights;  // per member; empty means all 1.0
};

struct MockTemplate {
  std::string text;  // contains exactly one "[MASK]"
  std::map<std::string, double> categories;  // category name -> slot weight
  std::map<std::string, double> terms;       // extra per-term slot weight
  double occurrences = 1.0;  // relative frequency when generating a corpus
};

// Declarative description of an enumerable masked LM. The completion
// distribution of a template is its smoothed slot count:
//
//   count(t) = sum_c w_T(c) * w_c(t) + w_T(t)
//   p(t | T) = (count(t) + alpha) / (sum_v count(v) + alpha * |V|)
//
// Patterns that match no template get the same formula over the summed
// counts of all templates.
struct MockWorld {
  std::string model_id = "mock";
  double smoothing = 0.01;
  std::size_t max_context = 512;
  std::size_t max_top_q = 0;
  std::vector<std::string> vocab;  // extra vocabulary items
  std::vector<MockCategory> categories;
  std::vector<MockTemplate> templates;

  static MockWorld FromJson(const nlohmann::json& j);
  static MockWorld LoadFile(const std::string& path);
  nlohmann::json ToJson() const;
};

class MockBackend final : public MlmBackend {
 public:
  // Throws Error(kInvalidWorld) for empty categories, an empty vocabulary,
  // unknown category references, malformed templates or smoothing <= 0.
  explicit MockBackend(const MockWorld& world);

  BackendInfo Info() const override;
  Completion Complete(
      const MaskedPattern& pattern, std::size_t top_q,
      const std::vector<std::string>& terms_of_interest) const override;
  bool Contains(std::string_view term) const override;

  // The fully sorted distribution the backend uses for `pattern`.
  std::vector<CompletionEntry> Distribution(const MaskedPattern& pattern) const;
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  bool MatchesTemplate(const MaskedPattern& pattern) const;

 private:
  struct Dist {
    std::vector<double> logprob;      // by vocab id
    std::vector<std::uint32_t> order; // vocab ids in completion order
    std::vector<std::uint32_t> rank;  // 0-based position by vocab id
  };

  Dist MakeDist(const std::vector<double>& counts) const;
  const Dist& Lookup(const MaskedPattern& pattern) const;

  BackendInfo info_;
  double smoothing_;
  std::vector<std::string> vocab_;  // sorted
  std::unordered_map<std::string, std::uint32_t> vocab_ids_;
  std::unordered_map<std::string, std::size_t> template_ids_;  // by text
  std::vector<Dist> dists_;  // one per distinct template text
  Dist background_;
};

}  // namespace tse

#endif  // TSE_MOCK_LM_H_
