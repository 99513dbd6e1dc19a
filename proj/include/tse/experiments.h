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

#ifndef TSE_EXPERIMENTS_H_
#define TSE_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"
#include "tse/candidates.h"
#include "tse/corpus.h"
#include "tse/eval.h"
#include "tse/expansion.h"
#include "tse/mining.h"
#include "tse/mlm.h"
#include "tse/mpb2.h"

namespace tse {

enum class Method { kMpb1, kBb, kMpb2, kMpb2Oracle, kS2v };

std::string_view MethodName(Method method);
// Throws Error(kValidation) naming the allowed values.
Method ParseMethod(std::string_view name);

struct MethodConfig {
  Method method = Method::kMpb1;
  std::size_t sentence_budget = 2000;  // split evenly per seed
  std::size_t patterns = 160;
  double diversity_fraction = 0.5;
  std::optional<std::size_t> max_rank_cap;
  SimilarityConfig similarity;
  std::size_t candidates = 1000;  // neighbours taken from the embedding table
  std::optional<std::size_t> freq_cap;
  std::optional<std::size_t> top_n;  // default: 200, or 350 for sets > 100
  std::optional<std::size_t> fallback_top_q;
  int workers = 1;

  // ℓ = 160 for the vocabulary expanders, 20 for the similarity expanders.
  static MethodConfig Defaults(Method method);
  // Defaults for the named method overlaid with the keys present in `j`
  // (the ToJson names plus "workers"). Null clears an optional field.
  // Throws Error(kValidation) listing every malformed or invalid field.
  static MethodConfig FromJson(const nlohmann::json& j);

  MiningConfig Mining(std::size_t seed_count) const;
  // Throws Error(kValidation) listing every violated field.
  void Validate() const;
  nlohmann::json ToJson() const;
};

// Borrowed inputs. Which ones are required depends on the method.
struct Resources {
  const CorpusIndex* corpus = nullptr;
  const MlmBackend* backend = nullptr;
  const EmbeddingTable* embeddings = nullptr;
  std::vector<std::string> candidates;  // explicit MPB2 candidate list
};

struct MethodOutput {
  Expansion expansion;
  std::optional<IndicativePatternSet> patterns;
};

// Runs one expander on one seed set. `oracle` supplies the gold members
// added to the candidate list in MPB2+O mode.
MethodOutput RunMethod(const Resources& resources, const MethodConfig& config,
                       const SeedSet& seeds, std::size_t top_n,
                       const GoldSet* oracle = nullptr);

// Throws Error(kValidation) naming each resource the method lacks.
void CheckResources(const Resources& resources, const MethodConfig& config,
                    bool have_oracle);

// Whether a seed term satisfies the method's preconditions (vocabulary,
// corpus occurrence, embedding row).
bool SeedUsable(const Resources& resources, const MethodConfig& config,
                std::string_view term);

std::size_t DefaultTopN(const GoldSet& gold);
std::optional<std::size_t> DefaultCutoff(const GoldSet& gold);

struct SeedSample {
  std::vector<std::string> seeds;
  std::vector<std::string> rejected;
};

// Draws groups without replacement from a stream derived from
// (rng_seed, trial) and takes each group's first form; groups whose form
// fails `usable` are logged and skipped. Throws Error(kMissingSeed) when the
// gold set cannot supply seed_size usable groups.
SeedSample SampleSeeds(const GoldSet& gold, std::size_t seed_size,
                       std::uint64_t rng_seed, std::size_t trial,
                       const std::function<bool(const std::string&)>& usable);

struct TrialResult {
  std::size_t trial = 0;
  std::vector<std::string> seeds;
  std::vector<std::string> rejected;
  double ap = 0.0;
};

struct EvalOptions {
  std::size_t trials = 3;
  std::size_t seed_size = 3;
  std::uint64_t rng_seed = 17;
};

TrialResult RunTrial(const Resources& resources, const MethodConfig& config,
                     const GoldSet& gold, const EvalOptions& options,
                     std::size_t trial);

struct EvalReport {
  std::string gold;
  std::string method;
  std::optional<std::size_t> cutoff;
  std::size_t top_n = 0;
  std::vector<TrialResult> trials;
  double map = 0.0;

  nlohmann::json ToJson() const;
};

EvalReport Evaluate(const Resources& resources, const MethodConfig& config,
                    const GoldSet& gold, const EvalOptions& options);

struct GridReport {
  std::string gold;
  std::vector<std::size_t> sent_counts;
  std::vector<std::size_t> patt_counts;
  std::vector<std::vector<std::string>> seeds;  // fixed across cells
  // cells[p][s]: mean MAP, or nullopt where #patt > #sent.
  std::vector<std::vector<std::optional<double>>> cells;

  nlohmann::json ToJson() const;
};

// MPB1 over a (#sent, #patt) grid with the same seed sets in every cell.
GridReport GridExperiment(const Resources& resources, const MethodConfig& config,
                          const GoldSet& gold, const std::vector<std::size_t>& sent_counts,
                          const std::vector<std::size_t>& patt_counts,
                          const EvalOptions& options);

struct SweepReport {
  std::string gold;
  std::string method;
  std::vector<std::size_t> q_values;
  std::vector<std::vector<std::string>> seeds;
  std::vector<double> map;

  nlohmann::json ToJson() const;
};

SweepReport QSweep(const Resources& resources, const MethodConfig& config,
                   const GoldSet& gold, const std::vector<std::size_t>& q_values,
                   const EvalOptions& options);

struct SubsetReport {
  std::string subset;
  std::string superset;
  std::string method;
  std::vector<std::vector<std::string>> seeds;
  std::vector<double> subset_ap;
  std::vector<double> superset_ap;
  double subset_map = 0.0;
  double superset_map = 0.0;

  nlohmann::json ToJson() const;
};

// Seeds come from the subset; each expansion is scored against both sets.
// Throws Error(kValidation) unless every subset form is a superset form.
SubsetReport SubsetExperiment(const Resources& resources, const MethodConfig& config,
                              const GoldSet& subset, const GoldSet& superset,
                              const EvalOptions& options);

// Aligned-text rendering of any report's JSON form.
std::string RenderReportText(const nlohmann::json& report);

}  // namespace tse

#endif  // TSE_EXPERIMENTS_H_
