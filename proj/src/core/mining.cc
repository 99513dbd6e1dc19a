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

#include "tse/mining.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include "tse/error.h"
#include "tse/log.h"
#include "tse/parallel.h"

namespace tse {

SeedSet::SeedSet(const std::vector<std::string>& terms,
                 const TokenizerConfig& config) {
  if (terms.empty()) throw Error(ErrorCode::kValidation, "seed set is empty");
  std::set<std::string> seen;
  for (const auto& raw : terms) {
    std::string term = NormalizeTerm(raw, config);
    if (term.empty()) {
      throw Error(ErrorCode::kValidation,
                  "seed term is empty after normalization: '" + raw + "'");
    }
    if (!seen.insert(term).second) {
      throw Error(ErrorCode::kValidation, "duplicate seed term: '" + term + "'");
    }
    terms_.push_back(std::move(term));
  }
}

void MiningConfig::Validate(std::size_t seed_count) const {
  std::vector<std::string> problems;
  if (sentences_per_seed == 0) problems.push_back("sentences_per_seed must be >= 1");
  if (patterns == 0) problems.push_back("patterns must be >= 1");
  if (seed_count > 0 && patterns > seed_count * sentences_per_seed) {
    problems.push_back("patterns (" + std::to_string(patterns) +
                       ") exceeds k * sentences_per_seed (" +
                       std::to_string(seed_count * sentences_per_seed) + ")");
  }
  if (!(diversity_fraction > 0.0 && diversity_fraction <= 1.0)) {
    problems.push_back("diversity_fraction must be in (0, 1]");
  }
  if (max_rank_cap && *max_rank_cap == 0) problems.push_back("max_rank_cap must be >= 1");
  if (workers < 1) problems.push_back("workers must be >= 1");
  if (problems.empty()) return;
  std::string msg = "invalid mining config:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw Error(ErrorCode::kValidation, msg);
}

nlohmann::json MiningConfig::ToJson() const {
  nlohmann::json j{{"sentences_per_seed", sentences_per_seed},
                   {"patterns", patterns},
                   {"diversity_fraction", diversity_fraction}};
  j["max_rank_cap"] = max_rank_cap ? nlohmann::json(*max_rank_cap) : nlohmann::json();
  return j;
}

std::vector<CandidatePattern> CollectCandidates(const CorpusIndex& index,
                                                const SeedSet& seeds,
                                                std::size_t per_seed) {
  std::vector<CandidatePattern> out;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const auto& seed = seeds.terms()[s];
    const auto occurrences = index.FindOccurrences(seed, per_seed);
    if (occurrences.empty()) {
      throw Error(ErrorCode::kMissingSeed,
                  "seed term does not occur in the corpus: '" + seed + "'");
    }
    if (occurrences.size() < per_seed) {
      Log().debug("seed '{}': {} occurrences (budget {})", seed,
                  occurrences.size(), per_seed);
    }
    for (const auto& occ : occurrences) {
      out.push_back({index.Mask(occ), s, occ});
    }
  }
  return out;
}

void RequireSeedsInVocabulary(const MlmBackend& backend, const SeedSet& seeds) {
  for (const auto& seed : seeds.terms()) {
    if (!backend.Contains(seed)) {
      throw Error(ErrorCode::kOovSeed,
                  "seed term is not in the LM vocabulary: '" + seed + "'");
    }
  }
}

ScoredPattern ScorePattern(const MlmBackend& backend,
                           const MaskedPattern& pattern, const SeedSet& seeds,
                           std::size_t source_seed) {
  const Completion completion = backend.Complete(pattern, 1, seeds.terms());
  ScoredPattern scored;
  scored.pattern = pattern;
  scored.source_seed = source_seed;
  scored.per_seed_ranks.reserve(seeds.size());
  for (const auto& seed : seeds.terms()) {
    const std::size_t rank = RequireRank(completion, seed);
    scored.per_seed_ranks.push_back(rank);
    scored.max_rank = std::max(scored.max_rank, rank);
  }
  return scored;
}

std::vector<ScoredPattern> ScoreCandidates(
    const MlmBackend& backend, const std::vector<CandidatePattern>& candidates,
    const SeedSet& seeds, int workers) {
  std::vector<ScoredPattern> out(candidates.size());
  ParallelFor(candidates.size(), workers, [&](std::size_t i) {
    out[i] = ScorePattern(backend, candidates[i].pattern, seeds,
                          candidates[i].source_seed);
  });
  return out;
}

double DifferingTokenFraction(const MaskedPattern& candidate,
                              const MaskedPattern& kept) {
  std::unordered_set<std::string_view> mine;
  for (const auto& t : candidate.tokens()) {
    if (t != kMaskToken) mine.insert(t);
  }
  if (mine.empty()) return 0.0;
  std::unordered_set<std::string_view> theirs;
  for (const auto& t : kept.tokens()) {
    if (t != kMaskToken) theirs.insert(t);
  }
  std::size_t differing = 0;
  for (const auto& t : mine) differing += theirs.count(t) == 0;
  return static_cast<double>(differing) / static_cast<double>(mine.size());
}

std::vector<double> ComputeWeights(std::span<const std::size_t> max_ranks) {
  if (max_ranks.empty()) {
    throw Error(ErrorCode::kValidation, "cannot weight an empty pattern list");
  }
  std::vector<double> weights;
  weights.reserve(max_ranks.size());
  double total = 0.0;
  for (const std::size_t r : max_ranks) {
    if (r < 1) throw Error(ErrorCode::kValidation, "ranks are 1-based");
    weights.push_back(1.0 / static_cast<double>(r));
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  return weights;
}

IndicativePatternSet SelectIndicative(std::vector<ScoredPattern> candidates,
                                      const MiningConfig& config) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kValidation, "no candidate patterns to select from");
  }
  std::vector<std::pair<std::string, std::size_t>> keys;  // (text, index)
  keys.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    keys.emplace_back(candidates[i].pattern.Text(), i);
  }
  std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const auto ra = candidates[a.second].max_rank;
    const auto rb = candidates[b.second].max_rank;
    if (ra != rb) return ra < rb;
    return a.first < b.first;
  });

  IndicativePatternSet out;
  for (const auto& [text, i] : keys) {
    if (out.patterns.size() == config.patterns) break;
    auto& cand = candidates[i];
    if (config.max_rank_cap && cand.max_rank > *config.max_rank_cap) break;
    const bool diverse = std::all_of(
        out.patterns.begin(), out.patterns.end(), [&](const ScoredPattern& kept) {
          return DifferingTokenFraction(cand.pattern, kept.pattern) >=
                 config.diversity_fraction;
        });
    if (diverse) out.patterns.push_back(std::move(cand));
  }
  if (out.patterns.empty()) {
    throw Error(ErrorCode::kValidation,
                "no candidate pattern is within max_rank_cap (" +
                    std::to_string(config.max_rank_cap.value_or(0)) + ")");
  }
  if (out.patterns.size() < config.patterns) {
    Log().warn("kept {} of {} requested indicative patterns ({} candidates)",
               out.patterns.size(), config.patterns, candidates.size());
  }
  std::vector<std::size_t> ranks;
  for (const auto& p : out.patterns) ranks.push_back(p.max_rank);
  out.weights = ComputeWeights(ranks);
  return out;
}

IndicativePatternSet MineIndicativePatterns(const CorpusIndex& index,
                                            const MlmBackend& backend,
                                            const SeedSet& seeds,
                                            const MiningConfig& config) {
  config.Validate(seeds.size());
  RequireSeedsInVocabulary(backend, seeds);
  const auto candidates = CollectCandidates(index, seeds, config.sentences_per_seed);
  auto scored = ScoreCandidates(backend, candidates, seeds, config.workers);
  auto set = SelectIndicative(std::move(scored), config);
  set.seeds = seeds.terms();
  return set;
}

void WritePatternsJsonl(std::ostream& out, const IndicativePatternSet& set,
                        const nlohmann::json& meta) {
  nlohmann::json header = meta;
  header["seeds"] = set.seeds;
  header["count"] = set.patterns.size();
  out << nlohmann::json{{"meta", header}}.dump() << '\n';
  for (std::size_t i = 0; i < set.patterns.size(); ++i) {
    const auto& p = set.patterns[i];
    nlohmann::json j{{"tokens", p.pattern.tokens()},
                     {"mask_index", p.pattern.mask_index()},
                     {"text", p.pattern.Text()},
                     {"source_seed", p.source_seed},
                     {"per_seed_ranks", p.per_seed_ranks},
                     {"max_rank", p.max_rank},
                     {"weight", set.weights[i]}};
    out << j.dump() << '\n';
  }
}

IndicativePatternSet ReadPatternsJsonl(std::istream& in) {
  IndicativePatternSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorCode::kIo, "patterns line " + std::to_string(line_no) +
                                      ": not JSON");
    }
    try {
      if (j.contains("meta")) {
        set.seeds = j["meta"].value("seeds", std::vector<std::string>{});
        continue;
      }
      ScoredPattern p;
      p.pattern = MaskedPattern(j.at("tokens").get<std::vector<std::string>>(),
                                j.at("mask_index").get<std::size_t>());
      p.source_seed = j.value("source_seed", std::size_t{0});
      p.per_seed_ranks = j.value("per_seed_ranks", std::vector<std::size_t>{});
      p.max_rank = j.value("max_rank", std::size_t{0});
      set.patterns.push_back(std::move(p));
      set.weights.push_back(j.at("weight").get<double>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kIo, "patterns line " + std::to_string(line_no) +
                                      ": " + e.what());
    }
  }
  return set;
}

}  // namespace tse
