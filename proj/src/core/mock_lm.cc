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

#include "tse/mock_lm.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>

#include "tse/error.h"
#include "tse/text.h"

namespace tse {
namespace {

Error InvalidWorld(const std::string& what) {
  return Error(ErrorCode::kInvalidWorld, "invalid mock world: " + what);
}

}  // namespace

MockWorld MockWorld::FromJson(const nlohmann::json& j) {
  MockWorld world;
  try {
    world.model_id = j.value("model_id", world.model_id);
    world.smoothing = j.value("smoothing", world.smoothing);
    world.max_context = j.value("max_context", world.max_context);
    world.max_top_q = j.value("max_top_q", world.max_top_q);
    world.vocab = j.value("vocab", std::vector<std::string>{});
    for (const auto& c : j.at("categories")) {
      MockCategory cat;
      cat.name = c.at("name").get<std::string>();
      cat.members = c.at("members").get<std::vector<std::string>>();
      cat.weights = c.value("weights", std::vector<double>{});
      world.categories.push_back(std::move(cat));
    }
    for (const auto& t : j.at("templates")) {
      MockTemplate tpl;
      tpl.text = t.at("text").get<std::string>();
      tpl.categories =
          t.value("categories", std::map<std::string, double>{});
      tpl.terms = t.value("terms", std::map<std::string, double>{});
      tpl.occurrences = t.value("occurrences", 1.0);
      world.templates.push_back(std::move(tpl));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidWorld(e.what());
  }
  return world;
}

MockWorld MockWorld::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open mock world: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidWorld(path + ": " + e.what());
  }
  return FromJson(j);
}

nlohmann::json MockWorld::ToJson() const {
  nlohmann::json j;
  j["model_id"] = model_id;
  j["smoothing"] = smoothing;
  j["max_context"] = max_context;
  j["max_top_q"] = max_top_q;
  j["vocab"] = vocab;
  j["categories"] = nlohmann::json::array();
  for (const auto& c : categories) {
    nlohmann::json cj{{"name", c.name}, {"members", c.members}};
    if (!c.weights.empty()) cj["weights"] = c.weights;
    j["categories"].push_back(std::move(cj));
  }
  j["templates"] = nlohmann::json::array();
  for (const auto& t : templates) {
    nlohmann::json tj{{"text", t.text}, {"occurrences", t.occurrences}};
    if (!t.categories.empty()) tj["categories"] = t.categories;
    if (!t.terms.empty()) tj["terms"] = t.terms;
    j["templates"].push_back(std::move(tj));
  }
  return j;
}

MockBackend::MockBackend(const MockWorld& world) : smoothing_(world.smoothing) {
  if (!(world.smoothing > 0.0)) throw InvalidWorld("smoothing must be > 0");
  if (world.categories.empty()) throw InvalidWorld("no categories");
  if (world.templates.empty()) throw InvalidWorld("no templates");

  std::vector<MaskedPattern> patterns;
  patterns.reserve(world.templates.size());
  for (const auto& t : world.templates) {
    try {
      patterns.push_back(MaskedPattern::FromText(t.text));
    } catch (const Error& e) {
      throw InvalidWorld("template '" + t.text + "': " + e.what());
    }
  }

  std::set<std::string> vocab;
  auto add_single = [&vocab](const std::string& term) {
    const auto tokens = TokenStrings(term);
    if (tokens.size() == 1) vocab.insert(tokens[0]);
  };
  std::map<std::string, const MockCategory*> by_name;
  for (const auto& c : world.categories) {
    if (c.members.empty()) throw InvalidWorld("category '" + c.name + "' is empty");
    if (!c.weights.empty() && c.weights.size() != c.members.size()) {
      throw InvalidWorld("category '" + c.name + "' weights/members mismatch");
    }
    if (!by_name.emplace(c.name, &c).second) {
      throw InvalidWorld("duplicate category '" + c.name + "'");
    }
    for (const auto& m : c.members) add_single(m);
  }
  for (const auto& v : world.vocab) add_single(v);
  for (const auto& p : patterns) {
    for (const auto& tok : p.tokens()) {
      if (tok != kMaskToken) vocab.insert(tok);
    }
  }
  for (const auto& t : world.templates) {
    for (const auto& [term, w] : t.terms) add_single(term);
  }
  if (vocab.empty()) throw InvalidWorld("empty vocabulary");

  vocab_.assign(vocab.begin(), vocab.end());
  for (std::uint32_t i = 0; i < vocab_.size(); ++i) vocab_ids_[vocab_[i]] = i;

  info_.model_id = world.model_id;
  info_.vocab_size = vocab_.size();
  info_.max_context = world.max_context;
  info_.max_top_q = world.max_top_q;

  auto id_of = [this](const std::string& term) -> std::optional<std::uint32_t> {
    const auto tokens = TokenStrings(term);
    if (tokens.size() != 1) return std::nullopt;
    auto it = vocab_ids_.find(tokens[0]);
    if (it == vocab_ids_.end()) return std::nullopt;
    return it->second;
  };

  std::vector<std::vector<double>> counts;
  std::vector<double> total(vocab_.size(), 0.0);
  for (std::size_t ti = 0; ti < world.templates.size(); ++ti) {
    const auto& t = world.templates[ti];
    const std::string key = patterns[ti].Text();
    auto [it, fresh] = template_ids_.emplace(key, counts.size());
    if (fresh) counts.emplace_back(vocab_.size(), 0.0);
    auto& slot = counts[it->second];
    for (const auto& [name, weight] : t.categories) {
      auto c = by_name.find(name);
      if (c == by_name.end()) {
        throw InvalidWorld("template '" + t.text + "' references unknown category '" +
                           name + "'");
      }
      const MockCategory& cat = *c->second;
      for (std::size_t m = 0; m < cat.members.size(); ++m) {
        const auto id = id_of(cat.members[m]);
        if (!id) continue;
        const double mw = cat.weights.empty() ? 1.0 : cat.weights[m];
        slot[*id] += weight * mw;
      }
    }
    for (const auto& [term, weight] : t.terms) {
      if (const auto id = id_of(term)) slot[*id] += weight;
    }
  }
  for (const auto& slot : counts) {
    for (std::size_t i = 0; i < slot.size(); ++i) total[i] += slot[i];
  }
  dists_.reserve(counts.size());
  for (const auto& slot : counts) dists_.push_back(MakeDist(slot));
  background_ = MakeDist(total);
}

MockBackend::Dist MockBackend::MakeDist(const std::vector<double>& counts) const {
  Dist d;
  const double denom =
      std::accumulate(counts.begin(), counts.end(), 0.0) +
      smoothing_ * static_cast<double>(counts.size());
  d.logprob.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    d.logprob[i] = std::log((counts[i] + smoothing_) / denom);
  }
  d.order.resize(counts.size());
  std::iota(d.order.begin(), d.order.end(), 0u);
  // vocab_ is sorted, so id order is term order.
  std::stable_sort(d.order.begin(), d.order.end(),
                   [&d](std::uint32_t a, std::uint32_t b) {
                     return d.logprob[a] > d.logprob[b];
                   });
  d.rank.resize(counts.size());
  for (std::uint32_t pos = 0; pos < d.order.size(); ++pos) d.rank[d.order[pos]] = pos;
  return d;
}

const MockBackend::Dist& MockBackend::Lookup(const MaskedPattern& pattern) const {
  auto it = template_ids_.find(pattern.Text());
  return it == template_ids_.end() ? background_ : dists_[it->second];
}

bool MockBackend::MatchesTemplate(const MaskedPattern& pattern) const {
  return template_ids_.count(pattern.Text()) != 0;
}

BackendInfo MockBackend::Info() const { return info_; }

bool MockBackend::Contains(std::string_view term) const {
  const auto tokens = TokenStrings(term);
  return tokens.size() == 1 && vocab_ids_.count(tokens[0]) != 0;
}

std::vector<CompletionEntry> MockBackend::Distribution(
    const MaskedPattern& pattern) const {
  const Dist& d = Lookup(pattern);
  std::vector<CompletionEntry> out;
  out.reserve(d.order.size());
  for (const auto id : d.order) out.push_back({vocab_[id], d.logprob[id]});
  return out;
}

Completion MockBackend::Complete(
    const MaskedPattern& pattern, std::size_t top_q,
    const std::vector<std::string>& terms_of_interest) const {
  ValidateRequest(info_, pattern, top_q);
  const Dist& d = Lookup(pattern);
  Completion out;
  out.vocab_size = vocab_.size();
  const std::size_t n = std::min(top_q, d.order.size());
  out.top.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto id = d.order[i];
    out.top.push_back({vocab_[id], d.logprob[id]});
  }
  for (const auto& term : terms_of_interest) {
    const auto tokens = TokenStrings(term);
    std::optional<TermRank> rank;
    if (tokens.size() == 1) {
      auto it = vocab_ids_.find(tokens[0]);
      if (it != vocab_ids_.end()) {
        rank = TermRank{d.rank[it->second] + std::size_t{1}, d.logprob[it->second]};
      }
    }
    out.lookup.Set(term, rank);
  }
  return out;
}

}  // namespace tse
