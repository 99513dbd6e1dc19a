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

#include "tse/synthetic.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "tse/error.h"
#include "tse/text.h"

namespace tse {
namespace {

// Distributions are written out by hand so that a given seed produces the
// same world with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t Below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    while (true) {
      const std::uint64_t x = engine_();
      if (x < limit) return static_cast<std::size_t>(x % b);
    }
  }
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Normal() {
    double u = Unit();
    while (u <= 0.0) u = Unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * Unit());
  }
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[Below(i)]);
  }
  template <typename T>
  std::vector<T> Sample(const std::vector<T>& pool, std::size_t n) {
    std::vector<T> copy = pool;
    n = std::min(n, copy.size());
    for (std::size_t i = 0; i < n; ++i) std::swap(copy[i], copy[i + Below(copy.size() - i)]);
    copy.resize(n);
    return copy;
  }

 private:
  std::mt19937_64 engine_;
};

class WordMaker {
 public:
  explicit WordMaker(Rng& rng) : rng_(rng) {}

  std::string Make(std::size_t syllables) {
    static constexpr std::string_view kConsonants = "bdfgklmnprstvz";
    static constexpr std::string_view kVowels = "aeiou";
    while (true) {
      std::string w;
      for (std::size_t i = 0; i < syllables; ++i) {
        w += kConsonants[rng_.Below(kConsonants.size())];
        w += kVowels[rng_.Below(kVowels.size())];
      }
      if (used_.insert(w).second) return w;
    }
  }
  std::vector<std::string> Many(std::size_t n, std::size_t syllables) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(Make(syllables));
    return out;
  }

 private:
  Rng& rng_;
  std::set<std::string> used_;
};

double DifferingShare(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t differ = 0;
  for (const auto& t : a) differ += b.count(t) == 0;
  return static_cast<double>(differ) / static_cast<double>(a.size());
}

// Builds template texts from `pool` whose token sets differ from each other
// by at least 60%, so that all of them survive the diversity filter.
class TemplateMaker {
 public:
  explicit TemplateMaker(Rng& rng) : rng_(rng) {}

  std::string Make(const std::vector<std::string>& pool) {
    for (int attempt = 0;; ++attempt) {
      const std::size_t len = 5 + rng_.Below(4);
      std::vector<std::string> words = rng_.Sample(pool, len);
      std::set<std::string> set(words.begin(), words.end());
      bool distinct = true;
      for (const auto& other : made_) {
        if (DifferingShare(set, other) < 0.6 || DifferingShare(other, set) < 0.6) {
          distinct = false;
          break;
        }
      }
      if (!distinct && attempt < 200) continue;
      made_.push_back(set);
      const std::size_t mask_at = rng_.Below(len + 1);
      std::string text;
      for (std::size_t i = 0; i <= len; ++i) {
        if (i) text += ' ';
        text += i == mask_at ? std::string(kMaskToken) : words[i < mask_at ? i : i - 1];
      }
      return text + " .";
    }
  }

 private:
  Rng& rng_;
  std::vector<std::set<std::string>> made_;
};

std::string Fill(const std::string& text, const std::string& term) {
  const auto at = text.find(kMaskToken);
  return text.substr(0, at) + term + text.substr(at + kMaskToken.size());
}

}  // namespace

SyntheticWorld GenerateSyntheticWorld(const SynthOptions& options) {
  if (options.categories == 0 || options.members == 0 || options.dim == 0 ||
      options.noise_words == 0 || options.fill_per_template == 0) {
    throw Error(ErrorCode::kValidation, "synthetic world needs non-zero sizes");
  }
  Rng rng(options.seed);
  WordMaker words(rng);
  TemplateMaker templates(rng);
  SyntheticWorld out;
  MockWorld& world = out.world;
  world.model_id = "synthetic-" + std::to_string(options.seed);

  const std::size_t k = options.categories;
  std::vector<std::vector<std::string>> members(k);
  for (std::size_t c = 0; c < k; ++c) {
    const bool multi = c + 1 == k && options.multiword_last && k > 1;
    for (std::size_t m = 0; m < options.members; ++m) {
      const bool two = multi && m % 3 == 2;
      members[c].push_back(two ? words.Make(2) + " " + words.Make(2) : words.Make(3));
    }
    if (!multi) out.single_token_categories.push_back(c);
  }
  const auto noise = words.Many(options.noise_words, 2);
  const auto distractor_words = words.Many(30, 2);
  std::vector<std::vector<std::string>> context(k);
  for (auto& pool : context) pool = words.Many(40, 2);
  const auto shared_pool = words.Many(60, 2);

  for (std::size_t c = 0; c < k; ++c) {
    MockCategory cat;
    cat.name = "cat" + std::to_string(c);
    cat.members = members[c];
    for (std::size_t m = 0; m < members[c].size(); ++m) {
      cat.weights.push_back(1.0 + 0.5 * static_cast<double>(m));
    }
    world.categories.push_back(std::move(cat));
  }
  world.vocab = noise;
  world.vocab.insert(world.vocab.end(), distractor_words.begin(), distractor_words.end());

  struct Planned {
    std::string text;
    std::vector<std::string> fillers;
  };
  std::vector<Planned> planned;
  auto plan = [&](const MockTemplate& tpl, std::vector<std::string> fillers) {
    world.templates.push_back(tpl);
    planned.push_back({tpl.text, std::move(fillers)});
  };

  for (std::size_t c = 0; c < k; ++c) {
    const std::string name = world.categories[c].name;
    std::vector<std::string> order = members[c];
    rng.Shuffle(order);
    for (std::size_t t = 0; t < options.indicative_templates; ++t) {
      MockTemplate tpl;
      tpl.text = templates.Make(context[c]);
      tpl.categories[name] = 1.0;
      // A little template-specific noise in the slot.
      for (const auto& w : rng.Sample(noise, 3)) tpl.terms[w] = 0.2 + 0.6 * rng.Unit();
      // Consecutive slices of one shuffled order, so every member appears in
      // the same number of indicative sentences.
      std::vector<std::string> fill;
      for (std::size_t j = 0; j < std::min(options.fill_per_template, members[c].size()); ++j) {
        fill.push_back(order[(t * options.fill_per_template + j) % order.size()]);
      }
      plan(tpl, std::move(fill));
    }
    const std::size_t distractors =
        static_cast<std::size_t>(std::lround(5.0 * options.noise_level));
    for (std::size_t t = 0; t < distractors; ++t) {
      MockTemplate tpl;
      tpl.text = templates.Make(context[c]);
      for (const auto& w : distractor_words) tpl.terms[w] = 2.0 + 6.0 * rng.Unit();
      plan(tpl, rng.Sample(members[c], options.fill_per_template));
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c + 1; d < k; ++d) {
      MockTemplate tpl;
      tpl.text = templates.Make(shared_pool);
      tpl.categories[world.categories[c].name] = 1.0;
      tpl.categories[world.categories[d].name] = 0.7;
      auto fill = rng.Sample(members[c], options.fill_per_template / 2);
      for (auto& m : rng.Sample(members[d], options.fill_per_template / 2)) {
        fill.push_back(std::move(m));
      }
      plan(tpl, std::move(fill));
    }
  }
  std::vector<std::string> everyone;
  for (const auto& m : members) everyone.insert(everyone.end(), m.begin(), m.end());
  for (std::size_t t = 0; t < options.generic_templates; ++t) {
    MockTemplate tpl;
    tpl.text = templates.Make(shared_pool);
    for (const auto& cat : world.categories) tpl.categories[cat.name] = 0.3;
    for (const auto& w : rng.Sample(noise, 10)) tpl.terms[w] = 1.0 + 2.0 * rng.Unit();
    plan(tpl, rng.Sample(everyone, 2 * options.fill_per_template));
  }

  std::vector<std::string>& corpus = out.corpus;
  for (const auto& p : planned) {
    for (const auto& f : p.fillers) corpus.push_back(Fill(p.text, f));
  }
  while (corpus.size() < options.total_sentences) {
    const std::size_t len = 6 + rng.Below(7);
    std::string line;
    for (std::size_t i = 0; i < len; ++i) {
      if (i) line += ' ';
      line += noise[rng.Below(noise.size())];
    }
    corpus.push_back(line + " .");
  }
  rng.Shuffle(corpus);

  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<std::string>> groups;
    for (const auto& m : members[c]) groups.push_back({m});
    out.gold.emplace_back(world.categories[c].name, std::move(groups));
  }

  // Embeddings: members sit around their category centroid, every other word
  // is isotropic noise. Rows go in corpus frequency order.
  std::map<std::string, std::size_t> freq;
  for (const auto& line : corpus) {
    for (const auto& tok : TokenStrings(line)) ++freq[tok];
  }
  for (const auto& p : planned) {
    for (const auto& f : p.fillers) {
      if (f.find(' ') != std::string::npos) ++freq[f];
    }
  }
  std::map<std::string, std::size_t> category_of;
  for (std::size_t c = 0; c < k; ++c) {
    for (const auto& m : members[c]) category_of[m] = c;
  }
  std::vector<std::vector<double>> centroids(k, std::vector<double>(options.dim));
  for (auto& centroid : centroids) {
    for (auto& x : centroid) x = rng.Normal();
  }
  std::vector<std::pair<std::string, std::size_t>> rows(freq.begin(), freq.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> terms;
  std::vector<std::vector<float>> vectors;
  for (const auto& [term, count] : rows) {
    if (term == ".") continue;
    std::vector<float> v(options.dim);
    auto it = category_of.find(term);
    for (std::size_t d = 0; d < options.dim; ++d) {
      const double base = it == category_of.end() ? 0.0 : centroids[it->second][d];
      const double spread = it == category_of.end() ? 1.0 : 0.8;
      v[d] = static_cast<float>(base + spread * rng.Normal());
    }
    terms.push_back(term);
    vectors.push_back(std::move(v));
  }
  out.embeddings = EmbeddingTable::FromRows(terms, vectors);
  return out;
}

std::string GoldSetText(const GoldSet& gold) {
  std::string text;
  if (gold.open()) text += "#@ open\n";
  for (std::size_t g = 0; g < gold.size(); ++g) {
    const auto& forms = gold.surface(g);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (i) text += '\t';
      text += forms[i];
    }
    text += '\n';
  }
  return text;
}

void WriteSyntheticWorld(const SyntheticWorld& world, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(dir) / "gold", ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());
  auto open = [](const fs::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error(ErrorCode::kIo, "cannot write " + p.string());
    return f;
  };
  {
    auto f = open(fs::path(dir) / "world.json");
    f << world.world.ToJson().dump(1) << '\n';
  }
  {
    auto f = open(fs::path(dir) / "corpus.txt");
    for (const auto& line : world.corpus) f << line << '\n';
  }
  {
    auto f = open(fs::path(dir) / "embeddings.txt");
    world.embeddings.Save(f);
  }
  for (const auto& g : world.gold) {
    auto f = open(fs::path(dir) / "gold" / (g.name() + ".txt"));
    f << GoldSetText(g);
  }
}

}  // namespace tse
