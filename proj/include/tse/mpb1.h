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

#ifndef TSE_MPB1_H_
#define TSE_MPB1_H_

#include <cstddef>
#include <optional>

#include "tse/corpus.h"
#include "tse/expansion.h"
#include "tse/mining.h"
#include "tse/mlm.h"

namespace tse {

struct Mpb1Options {
  std::size_t top_n = 200;
  // When set, a backend without full-distribution support is queried with
  // this top_q instead; terms missing from a pattern's list get the floor
  // log(1 / (10 * vocab_size)).
  std::optional<std::size_t> fallback_top_q;
  int workers = 1;
};

// Floor log-probability for terms absent from a truncated distribution.
double TruncationFloor(std::size_t vocab_size);

// Product of experts over the indicative patterns:
//   score(t) = sum_i c_i * log p(t | m_i)
// for every vocabulary term, one full-distribution query per pattern.
// Accumulation runs in pattern order regardless of `workers`. Throws
// Error(kCapability) when the backend cannot return full distributions and
// no fallback_top_q is configured.
Expansion ScoreVocabTerms(const MlmBackend& backend,
                          const IndicativePatternSet& patterns,
                          const Mpb1Options& options);

// The pattern set of the basic baseline: the first `patterns` collected
// candidates, uniform weights, no rank scoring and no diversity filter.
IndicativePatternSet BaselinePatternSet(const CorpusIndex& index,
                                        const SeedSet& seeds,
                                        std::size_t per_seed,
                                        std::size_t patterns);

Expansion ExpandBaseline(const MlmBackend& backend, const CorpusIndex& index,
                         const SeedSet& seeds, const MiningConfig& mining,
                         const Mpb1Options& options);

}  // namespace tse

#endif  // TSE_MPB1_H_
