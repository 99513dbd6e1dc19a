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

#ifndef TSE_MINING_H_
#define TSE_MINING_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "tse/corpus.h"
#include "tse/mlm.h"
#include "tse/pattern.h"

namespace tse {

// The k seed terms, stored in normalized form.
class SeedSet {
 public:
  // Throws Error(kValidation) for an empty list, an empty term or a
  // duplicate after normalization.
  explicit SeedSet(const std::vector<std::string>& terms,
                   const TokenizerConfig& config = {});

  const std::vector<std::string>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<std::string> terms_;
};

struct MiningConfig {
  std::size_t sentences_per_seed = 666;  // L; 2000 / k for k = 3
  std::size_t patterns = 160;            // how many indicative patterns to keep
  double diversity_fraction = 0.5;
  std::optional<std::size_t> max_rank_cap;
  int workers = 1;

  // Throws Error(kValidation) listing every violated field.
  void Validate(std::size_t seed_count) const;
  nlohmann::json ToJson() const;
};

struct CandidatePattern {
  MaskedPattern pattern;
  std::size_t source_seed = 0;
  Occurrence occurrence;
};

struct ScoredPattern {
  MaskedPattern pattern;
  std::size_t source_seed = 0;
  std::vector<std::size_t> per_seed_ranks;
  std::size_t max_rank = 0;  // worst seed rank; 0 when the set was not scored

  friend bool operator==(const ScoredPattern&, const ScoredPattern&) = default;
};

struct IndicativePatternSet {
  std::vector<std::string> seeds;
  std::vector<ScoredPattern> patterns;
  std::vector<double> weights;

  bool empty() const { return patterns.empty(); }
  std::size_t size() const { return patterns.size(); }
};

// Up to `per_seed` masked occurrences of every seed, in corpus order, seed
// by seed. Throws Error(kMissingSeed) naming a seed with no occurrence.
std::vector<CandidatePattern> CollectCandidates(const CorpusIndex& index,
                                                const SeedSet& seeds,
                                                std::size_t per_seed);

// One completion request with the seeds as terms of interest; max_rank is
// the worst seed rank. Throws Error(kOovSeed) if a seed is not a vocabulary
// item.
ScoredPattern ScorePattern(const MlmBackend& backend,
                           const MaskedPattern& pattern, const SeedSet& seeds,
                           std::size_t source_seed = 0);

std::vector<ScoredPattern> ScoreCandidates(
    const MlmBackend& backend, const std::vector<CandidatePattern>& candidates,
    const SeedSet& seeds, int workers = 1);

// |set(candidate) \ set(kept)| / |set(candidate)| over non-mask tokens.
// A pattern without context tokens differs by 0.
double DifferingTokenFraction(const MaskedPattern& candidate,
                              const MaskedPattern& kept);

// c_i = (1 / max_rank_i) / sum_j (1 / max_rank_j). Throws Error(kValidation)
// for an empty list or a rank below 1.
std::vector<double> ComputeWeights(std::span<const std::size_t> max_ranks);

// Sorts by (max_rank, pattern text), drops ranks above the cap, then keeps a
// pattern only if it differs by at least diversity_fraction from every kept
// pattern, stopping at config.patterns. Throws Error(kValidation) for an
// empty candidate list; returns fewer patterns (with a warning) when the
// filter runs out of candidates.
IndicativePatternSet SelectIndicative(std::vector<ScoredPattern> candidates,
                                      const MiningConfig& config);

// The whole mining step, starting from a seed vocabulary check.
IndicativePatternSet MineIndicativePatterns(const CorpusIndex& index,
                                            const MlmBackend& backend,
                                            const SeedSet& seeds,
                                            const MiningConfig& config);

// Throws Error(kOovSeed) naming the first seed the backend does not know.
void RequireSeedsInVocabulary(const MlmBackend& backend, const SeedSet& seeds);

// JSON lines: an optional {"meta": ...} first line, then one pattern per line
// with tokens, mask_index, text, source_seed, per_seed_ranks, max_rank and
// weight.
void WritePatternsJsonl(std::ostream& out, const IndicativePatternSet& set,
                        const nlohmann::json& meta);
IndicativePatternSet ReadPatternsJsonl(std::istream& in);

}  // namespace tse

#endif  // TSE_MINING_H_
