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

#include "tse/mpb2.h"

#include <algorithm>
#include <memory>
#include <set>
#include <unordered_set>

#include "tse/cache.h"
#include "tse/error.h"
#include "tse/log.h"
#include "tse/parallel.h"

namespace tse {
namespace {

std::vector<std::string> SortedTerms(const std::vector<CompletionEntry>& list,
                                     std::size_t q) {
  std::vector<std::string> out;
  const std::size_t n = std::min(q, list.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(list[i].term);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t IntersectionSize(const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::vector<std::string> TopQ(const MlmBackend& backend, const MaskedPattern& p,
                              std::size_t q) {
  return SortedTerms(backend.Complete(p, q, {}).top, q);
}

}  // namespace

void SimilarityConfig::Validate() const {
  std::vector<std::string> problems;
  if (q == 0) problems.push_back("q must be >= 1");
  if (max_occurrences == 0) problems.push_back("max_occurrences must be >= 1");
  if (problems.empty()) return;
  std::string msg = "invalid similarity config:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw Error(ErrorCode::kValidation, msg);
}

double TopQOverlap(const std::vector<CompletionEntry>& a,
                   const std::vector<CompletionEntry>& b, std::size_t q) {
  if (q == 0) throw Error(ErrorCode::kValidation, "q must be >= 1");
  return static_cast<double>(IntersectionSize(SortedTerms(a, q), SortedTerms(b, q))) /
         static_cast<double>(q);
}

double PatternSimilarity(const MlmBackend& backend, const MaskedPattern& a,
                         const MaskedPattern& b, std::size_t q) {
  if (q == 0) throw Error(ErrorCode::kValidation, "q must be >= 1");
  return TopQOverlap(backend.Complete(a, q, {}).top, backend.Complete(b, q, {}).top, q);
}

CandidateOccurrences CollectPats(const CorpusIndex& index, std::string_view term,
                                 std::size_t max_occurrences) {
  CandidateOccurrences out;
  const auto tokens = TokenStrings(term, index.config());
  out.term = JoinTokens(tokens);
  if (tokens.empty()) return out;
  for (const auto& occ : index.FindOccurrences(tokens, max_occurrences)) {
    out.patterns.push_back(index.Mask(occ));
  }
  return out;
}

double ScoreCandidate(const MlmBackend& backend, const IndicativePatternSet& indicative,
                      const CandidateOccurrences& occurrences,
                      const SimilarityConfig& config) {
  config.Validate();
  if (indicative.empty()) {
    throw Error(ErrorCode::kValidation, "no indicative patterns");
  }
  if (occurrences.patterns.empty()) return 0.0;
  std::vector<std::vector<std::string>> theirs;
  theirs.reserve(occurrences.patterns.size());
  for (const auto& p : occurrences.patterns) theirs.push_back(TopQ(backend, p, config.q));
  double score = 0.0;
  for (std::size_t i = 0; i < indicative.size(); ++i) {
    const auto mine = TopQ(backend, indicative.patterns[i].pattern, config.q);
    std::size_t best = 0;
    for (const auto& t : theirs) best = std::max(best, IntersectionSize(mine, t));
    score += indicative.weights[i] *
             (static_cast<double>(best) / static_cast<double>(config.q));
  }
  return score;
}

Expansion ExpandMpb2(const MlmBackend& backend, const CorpusIndex& index,
                     const IndicativePatternSet& indicative,
                     const std::vector<std::string>& candidates,
                     const Mpb2Options& options) {
  options.similarity.Validate();
  if (indicative.empty()) throw Error(ErrorCode::kValidation, "no indicative patterns");
  if (candidates.empty()) {
    throw Error(ErrorCode::kValidation,
                "MPB2 needs a non-empty candidate list (see the candidates "
                "module: --embeddings/--candidates or --candidates-file)");
  }
  const std::size_t q = options.similarity.q;
  // Non-owning view; the cache only lives for this call.
  const std::shared_ptr<const MlmBackend> view(&backend, [](const MlmBackend*) {});
  const CachingBackend cached(view);

  std::vector<std::vector<std::string>> indicative_top(indicative.size());
  ParallelFor(indicative.size(), options.workers, [&](std::size_t i) {
    indicative_top[i] = TopQ(cached, indicative.patterns[i].pattern, q);
  });

  std::vector<std::string> terms;
  std::unordered_set<std::string> seen;
  for (const auto& c : candidates) {
    std::string norm = NormalizeTerm(c, index.config());
    if (norm.empty() || !seen.insert(norm).second) continue;
    terms.push_back(std::move(norm));
  }

  std::vector<ExpansionEntry> entries(terms.size());
  std::vector<std::size_t> occurrence_counts(terms.size());
  ParallelFor(terms.size(), options.workers, [&](std::size_t t) {
    const auto occ = CollectPats(index, terms[t], options.similarity.max_occurrences);
    occurrence_counts[t] = occ.patterns.size();
    std::vector<std::size_t> best(indicative.size(), 0);
    for (const auto& p : occ.patterns) {
      const auto top = TopQ(cached, p, q);
      for (std::size_t i = 0; i < indicative.size(); ++i) {
        best[i] = std::max(best[i], IntersectionSize(indicative_top[i], top));
      }
    }
    double score = 0.0;
    for (std::size_t i = 0; i < indicative.size(); ++i) {
      score += indicative.weights[i] *
               (static_cast<double>(best[i]) / static_cast<double>(q));
    }
    entries[t] = {terms[t], score};
  });

  std::size_t without_occurrences = 0;
  for (const auto n : occurrence_counts) without_occurrences += n == 0;
  if (without_occurrences > 0) {
    Log().info("MPB2: {} of {} candidates have no corpus occurrence (score 0)",
               without_occurrences, terms.size());
  }

  Expansion out;
  out.method = "mpb2";
  out.entries = std::move(entries);
  RankAndTruncate(out.entries, options.top_n);
  out.metadata["candidates"] = terms.size();
  out.metadata["candidates_without_occurrences"] = without_occurrences;
  out.metadata["patterns"] = indicative.size();
  out.metadata["q"] = q;
  out.metadata["max_occurrences"] = options.similarity.max_occurrences;
  out.metadata["distinct_patterns"] = cached.size();
  return out;
}

}  // namespace tse
