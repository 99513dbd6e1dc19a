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

#ifndef TSE_CANDIDATES_H_
#define TSE_CANDIDATES_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tse/expansion.h"
#include "tse/mining.h"

namespace tse {

struct EmbeddingLoadOptions {
  // Terms such as "duck|NOUN" are cut at the last boundary character.
  std::optional<char> pos_boundary = '|';
  bool underscore_as_space = true;  // "new_york" -> "new york"
  TokenizerConfig tokenizer;
};

// Dense term vectors of one dimension, in file order. File order is taken as
// frequency order for the frequency cap. Terms are stored normalized; a term
// repeated after normalization keeps its first row.
class EmbeddingTable {
 public:
  // Text format: optional "count dim" header, then "term<TAB>v1 v2 ... vd"
  // per line. Throws Error(kCorruptTable) on a dimension mismatch or an
  // unparsable row.
  static EmbeddingTable Load(std::istream& in, const EmbeddingLoadOptions& options = {});
  static EmbeddingTable LoadFile(const std::string& path,
                                 const EmbeddingLoadOptions& options = {});
  static EmbeddingTable FromRows(const std::vector<std::string>& terms,
                                 const std::vector<std::vector<float>>& vectors,
                                 const TokenizerConfig& tokenizer = {});

  void Save(std::ostream& out) const;

  std::size_t size() const { return terms_.size(); }
  std::size_t dim() const { return dim_; }
  const std::string& term(std::size_t i) const { return terms_[i]; }
  std::span<const float> vector(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  double norm(std::size_t i) const { return norms_[i]; }
  std::optional<std::size_t> Find(std::string_view term) const;
  std::size_t duplicates_dropped() const { return duplicates_; }
  const TokenizerConfig& tokenizer() const { return tokenizer_; }

 private:
  void Append(std::string term, std::span<const float> values);

  std::size_t dim_ = 0;
  std::vector<std::string> terms_;
  std::vector<float> data_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t duplicates_ = 0;
  TokenizerConfig tokenizer_;
};

struct Candidate {
  std::string term;
  double cosine = 0.0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct CandidateSet {
  std::vector<Candidate> entries;  // cosine descending, ties by term
  std::size_t zero_norm_excluded = 0;
  std::size_t scanned = 0;
};

// Arithmetic mean of the seed vectors. Throws Error(kMissingSeed) naming a
// seed absent from the table.
std::vector<double> MeanSeedVector(const EmbeddingTable& table, const SeedSet& seeds);

// Cosine of `query` with row i; both norms must be non-zero.
double Cosine(const EmbeddingTable& table, std::size_t i,
              std::span<const double> query, double query_norm);

// The n rows with the highest cosine to `query` among the first freq_cap
// rows, ties by term. Rows with zero norm are skipped and counted. The scan
// is sharded over `workers` threads with a deterministic merge.
CandidateSet TopNeighbors(const EmbeddingTable& table, std::span<const double> query,
                          std::size_t n, std::optional<std::size_t> freq_cap = {},
                          int workers = 1);

// The distributional baseline: nearest neighbours of the mean seed vector.
Expansion ExpandS2v(const EmbeddingTable& table, const SeedSet& seeds, std::size_t n,
                    std::optional<std::size_t> freq_cap = {}, int workers = 1);

}  // namespace tse

#endif  // TSE_CANDIDATES_H_
