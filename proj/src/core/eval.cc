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

#include "tse/eval.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <vector>

#include "tse/error.h"

namespace tse {

GoldSet::GoldSet(std::string name, std::vector<std::vector<std::string>> groups,
                 bool open, const TokenizerConfig& tokenizer)
    : name_(std::move(name)), open_(open), tokenizer_(tokenizer) {
  for (auto& forms : groups) {
    std::vector<std::string> kept;
    std::string first;
    const std::size_t g = surface_.size();
    for (auto& form : forms) {
      std::string norm = NormalizeTerm(form, tokenizer_);
      if (norm.empty()) continue;
      auto [it, fresh] = group_of_.emplace(norm, g);
      if (!fresh && it->second != g) {
        throw Error(ErrorCode::kValidation,
                    "gold set '" + name_ + "': form '" + form +
                        "' belongs to two groups");
      }
      if (first.empty()) first = norm;
      kept.push_back(std::move(form));
    }
    if (kept.empty()) continue;
    surface_.push_back(std::move(kept));
    first_normalized_.push_back(std::move(first));
  }
}

GoldSet GoldSet::Parse(std::istream& in, std::string name,
                       const TokenizerConfig& tokenizer) {
  std::vector<std::vector<std::string>> groups;
  bool open = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#@", 0) == 0) {
      if (NormalizeTerm(line.substr(2)) == "open") open = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> forms;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      std::string form = line.substr(start, tab == std::string::npos ? tab : tab - start);
      if (!NormalizeTerm(form, tokenizer).empty()) forms.push_back(std::move(form));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (!forms.empty()) groups.push_back(std::move(forms));
  }
  return GoldSet(std::move(name), std::move(groups), open, tokenizer);
}

GoldSet GoldSet::LoadFile(const std::string& path, const TokenizerConfig& tokenizer) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open gold set: " + path);
  return Parse(in, std::filesystem::path(path).stem().string(), tokenizer);
}

std::vector<std::string> GoldSet::Representatives() const { return first_normalized_; }

std::vector<std::string> GoldSet::AllForms() const {
  std::vector<std::string> out;
  for (const auto& forms : surface_) {
    for (const auto& f : forms) out.push_back(NormalizeTerm(f, tokenizer_));
  }
  return out;
}

std::optional<std::size_t> GoldSet::GroupOf(std::string_view term) const {
  auto it = group_of_.find(NormalizeTerm(term, tokenizer_));
  if (it == group_of_.end()) return std::nullopt;
  return it->second;
}

double AveragePrecision(const std::vector<std::string>& ranking, const GoldSet& gold,
                        std::optional<std::size_t> cutoff) {
  if (gold.empty()) {
    throw Error(ErrorCode::kUndefinedMetric,
                "average precision is undefined for an empty gold set");
  }
  if (ranking.empty()) {
    throw Error(ErrorCode::kValidation, "cannot score an empty ranking");
  }
  if (cutoff && *cutoff == 0) throw Error(ErrorCode::kValidation, "cutoff must be >= 1");
  const std::size_t depth = cutoff ? std::min(*cutoff, ranking.size()) : ranking.size();
  std::vector<bool> credited(gold.size(), false);
  std::size_t hits = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < depth; ++i) {
    const auto g = gold.GroupOf(ranking[i]);
    if (!g || credited[*g]) continue;
    credited[*g] = true;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  const std::size_t denom = cutoff ? std::min(gold.size(), *cutoff) : gold.size();
  return sum / static_cast<double>(denom);
}

double AveragePrecision(const Expansion& expansion, const GoldSet& gold,
                        std::optional<std::size_t> cutoff) {
  return AveragePrecision(expansion.Terms(), gold, cutoff);
}

}  // namespace tse
