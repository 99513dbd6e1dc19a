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

#ifndef TSE_MPB2_H_
#define TSE_MPB2_H_

#include <cstddef>
#include <string>
#include <vector>

#include "tse/corpus.h"
#include "tse/expansion.h"
#include "tse/mining.h"
#include "tse/mlm.h"

namespace tse {

struct SimilarityConfig {
  std::size_t q = 50;
  std::size_t max_occurrences = 20;

  void Validate() const;
};

// |A ∩ B| / q for two top-q completion lists.
double TopQOverlap(const std::vector<CompletionEntry>& a,
                   const std::vector<CompletionEntry>& b, std::size_t q);

// Fraction of shared terms in the two patterns' top-q completions.
double PatternSimilarity(const MlmBackend& backend, const MaskedPattern& a,
                         const MaskedPattern& b, std::size_t q);

struct CandidateOccurrences {
  std::string term;  // normalized
  std::vector<MaskedPattern> patterns;
};

// pats(t): up to max_occurrences masked occurrences of the term in corpus
// order. Multi-word terms are masked as one span.
CandidateOccurrences CollectPats(const CorpusIndex& index, std::string_view term,
                                 std::size_t max_occurrences);

//   score(t) = sum_i c_i * max_{m in pats(t)} sim(m_i, m)
// Empty pats(t) scores 0.
double ScoreCandidate(const MlmBackend& backend, const IndicativePatternSet& indicative,
                      const CandidateOccurrences& occurrences,
                      const SimilarityConfig& config);

struct Mpb2Options {
  SimilarityConfig similarity;
  std::size_t top_n = 200;
  int workers = 1;
};

// Scores every candidate (normalized, deduplicated) and ranks them. Top-q
// lists are computed once per distinct pattern through an in-memory cache
// layered over `backend`. Throws Error(kValidation) for an empty candidate
// list or pattern set.
Expansion ExpandMpb2(const MlmBackend& backend, const CorpusIndex& index,
                     const IndicativePatternSet& indicative,
                     const std::vector<std::string>& candidates,
                     const Mpb2Options& options);

}  // namespace tse

#endif  // TSE_MPB2_H_
