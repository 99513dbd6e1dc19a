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

#include "tse/mpb1.h"

#include <cmath>
#include <unordered_map>

#include "tse/error.h"
#include "tse/log.h"
#include "tse/parallel.h"

namespace tse {

double TruncationFloor(std::size_t vocab_size) {
  return std::log(1.0 / (static_cast<double>(vocab_size) * 10.0));
}

Expansion ScoreVocabTerms(const MlmBackend& backend,
                          const IndicativePatternSet& patterns,
                          const Mpb1Options& options) {
  if (patterns.empty()) {
    throw Error(ErrorCode::kValidation, "MPB1 needs at least one pattern");
  }
  if (patterns.weights.size() != patterns.patterns.size()) {
    throw Error(ErrorCode::kValidation, "pattern/weight count mismatch");
  }
  const BackendInfo info = backend.Info();
  std::size_t top_q = info.vocab_size;
  bool truncated = false;
  if (!backend.SupportsFullDistribution()) {
    if (!options.fallback_top_q) {
      throw Error(ErrorCode::kCapability,
                  "backend '" + info.model_id + "' does not return full "
                  "distributions (max_top_q=" + std::to_string(info.max_top_q) +
                  "); set a fallback top_q to score with a floor for absent terms");
    }
    top_q = std::min(*options.fallback_top_q, info.max_top_q);
    truncated = true;
  }

  const std::size_t n = patterns.size();
  std::vector<Completion> completions(n);
  ParallelFor(n, options.workers, [&](std::size_t i) {
    completions[i] = backend.Complete(patterns.patterns[i].pattern, top_q, {});
  });

  const double floor = TruncationFloor(info.vocab_size);
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::string> terms;
  std::vector<double> scores;
  std::vector<std::size_t> last_seen;  // pattern index + 1 of the last hit
  std::size_t floored_terms = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = patterns.weights[i];
    for (const auto& entry : completions[i].top) {
      auto [it, fresh] = ids.emplace(entry.term, terms.size());
      if (fresh) {
        terms.push_back(entry.term);
        double prior = 0.0;
        for (std::size_t j = 0; j < i; ++j) prior += patterns.weights[j] * floor;
        scores.push_back(prior);
        last_seen.push_back(0);
      }
      const std::size_t id = it->second;
      if (last_seen[id] == i + 1) continue;  // duplicate entry in one list
      scores[id] += c * entry.logprob;
      last_seen[id] = i + 1;
    }
    for (std::size_t id = 0; id < terms.size(); ++id) {
      if (last_seen[id] != i + 1) scores[id] += c * floor;
    }
  }
  {
    // Terms that received at least one floor contribution.
    std::vector<std::size_t> hits(terms.size(), 0);
    for (const auto& completion : completions) {
      std::unordered_map<std::string, bool> seen;
      for (const auto& entry : completion.top) {
        if (seen.emplace(entry.term, true).second) ++hits[ids[entry.term]];
      }
    }
    for (const auto h : hits) floored_terms += h < n;
  }

  Expansion out;
  out.method = "mpb1";
  out.entries.reserve(terms.size());
  for (std::size_t id = 0; id < terms.size(); ++id) {
    out.entries.push_back({terms[id], scores[id]});
  }
  RankAndTruncate(out.entries, options.top_n);
  out.metadata["patterns"] = n;
  out.metadata["vocab_size"] = info.vocab_size;
  out.metadata["truncated_distributions"] = truncated;
  out.metadata["floored_terms"] = floored_terms;
  if (truncated) {
    out.metadata["top_q"] = top_q;
    out.metadata["floor_logprob"] = floor;
  }
  return out;
}

IndicativePatternSet BaselinePatternSet(const CorpusIndex& index,
                                        const SeedSet& seeds,
                                        std::size_t per_seed,
                                        std::size_t patterns) {
  auto candidates = CollectCandidates(index, seeds, per_seed);
  if (candidates.size() > patterns) candidates.resize(patterns);
  IndicativePatternSet set;
  set.seeds = seeds.terms();
  for (auto& c : candidates) {
    ScoredPattern p;
    p.pattern = std::move(c.pattern);
    p.source_seed = c.source_seed;
    set.patterns.push_back(std::move(p));
  }
  set.weights.assign(set.patterns.size(),
                     1.0 / static_cast<double>(set.patterns.size()));
  return set;
}

Expansion ExpandBaseline(const MlmBackend& backend, const CorpusIndex& index,
                         const SeedSet& seeds, const MiningConfig& mining,
                         const Mpb1Options& options) {
  mining.Validate(seeds.size());
  RequireSeedsInVocabulary(backend, seeds);
  const auto set =
      BaselinePatternSet(index, seeds, mining.sentences_per_seed, mining.patterns);
  Expansion out = ScoreVocabTerms(backend, set, options);
  out.method = "bb";
  return out;
}

}  // namespace tse
