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

#include "tse/candidates.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "tse/error.h"
#include "tse/log.h"
#include "tse/parallel.h"

namespace tse {
namespace {

bool CandidateBefore(const Candidate& a, const Candidate& b) {
  if (a.cosine != b.cosine) return a.cosine > b.cosine;
  return a.term < b.term;
}

double Norm(std::span<const float> v) {
  double s = 0.0;
  for (const float x : v) s += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(s);
}

bool ParseFloats(std::string_view text, std::vector<float>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    float v = 0.0f;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
    if (ec != std::errc() || ptr != text.data() + j) return false;
    out.push_back(v);
    i = j;
  }
  return true;
}

}  // namespace

void EmbeddingTable::Append(std::string term, std::span<const float> values) {
  if (term.empty()) return;
  if (!index_.emplace(term, terms_.size()).second) {
    ++duplicates_;
    return;
  }
  terms_.push_back(std::move(term));
  data_.insert(data_.end(), values.begin(), values.end());
  norms_.push_back(Norm(values));
}

EmbeddingTable EmbeddingTable::Load(std::istream& in,
                                    const EmbeddingLoadOptions& options) {
  EmbeddingTable table;
  table.tokenizer_ = options.tokenizer;
  std::string line;
  std::size_t line_no = 0;
  std::vector<float> values;
  auto corrupt = [&line_no](const std::string& what) {
    return Error(ErrorCode::kCorruptTable,
                 "embedding line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      if (line_no == 1) {
        // "count dim" header.
        std::vector<float> header;
        if (ParseFloats(line, header) && header.size() == 2) {
          table.dim_ = static_cast<std::size_t>(header[1]);
          continue;
        }
      }
      throw corrupt("expected term<TAB>values");
    }
    std::string term = line.substr(0, tab);
    if (!ParseFloats(std::string_view(line).substr(tab + 1), values) || values.empty()) {
      throw corrupt("unparsable vector");
    }
    if (table.dim_ == 0) table.dim_ = values.size();
    if (values.size() != table.dim_) {
      throw corrupt("dimension " + std::to_string(values.size()) + ", expected " +
                    std::to_string(table.dim_));
    }
    if (options.pos_boundary) {
      const auto cut = term.rfind(*options.pos_boundary);
      if (cut != std::string::npos && cut > 0) term.resize(cut);
    }
    if (options.underscore_as_space) std::replace(term.begin(), term.end(), '_', ' ');
    table.Append(NormalizeTerm(term, options.tokenizer), values);
  }
  if (table.terms_.empty()) throw Error(ErrorCode::kCorruptTable, "embedding table is empty");
  if (table.duplicates_ > 0) {
    Log().info("embedding table: dropped {} duplicate terms", table.duplicates_);
  }
  return table;
}

EmbeddingTable EmbeddingTable::LoadFile(const std::string& path,
                                        const EmbeddingLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open embeddings: " + path);
  return Load(in, options);
}

EmbeddingTable EmbeddingTable::FromRows(const std::vector<std::string>& terms,
                                        const std::vector<std::vector<float>>& vectors,
                                        const TokenizerConfig& tokenizer) {
  if (terms.size() != vectors.size() || terms.empty()) {
    throw Error(ErrorCode::kCorruptTable, "terms/vectors mismatch or empty");
  }
  EmbeddingTable table;
  table.tokenizer_ = tokenizer;
  table.dim_ = vectors[0].size();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (vectors[i].size() != table.dim_ || table.dim_ == 0) {
      throw Error(ErrorCode::kCorruptTable, "dimension mismatch at row " + std::to_string(i));
    }
    table.Append(NormalizeTerm(terms[i], tokenizer), vectors[i]);
  }
  return table;
}

void EmbeddingTable::Save(std::ostream& out) const {
  out << terms_.size() << ' ' << dim_ << '\n';
  char buf[64];
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    out << terms_[i] << '\t';
    const auto v = vector(i);
    for (std::size_t d = 0; d < dim_; ++d) {
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v[d]);
      if (d) out << ' ';
      out.write(buf, ptr - buf);
    }
    out << '\n';
  }
}

std::optional<std::size_t> EmbeddingTable::Find(std::string_view term) const {
  auto it = index_.find(NormalizeTerm(term, tokenizer_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> MeanSeedVector(const EmbeddingTable& table, const SeedSet& seeds) {
  std::vector<double> mean(table.dim(), 0.0);
  for (const auto& seed : seeds.terms()) {
    const auto row = table.Find(seed);
    if (!row) {
      throw Error(ErrorCode::kMissingSeed,
                  "seed term is not in the embedding table: '" + seed + "'");
    }
    const auto v = table.vector(*row);
    for (std::size_t d = 0; d < v.size(); ++d) mean[d] += v[d];
  }
  for (double& x : mean) x /= static_cast<double>(seeds.size());
  return mean;
}

double Cosine(const EmbeddingTable& table, std::size_t i,
              std::span<const double> query, double query_norm) {
  const auto v = table.vector(i);
  double dot = 0.0;
  for (std::size_t d = 0; d < v.size(); ++d) dot += static_cast<double>(v[d]) * query[d];
  return dot / (query_norm * table.norm(i));
}

CandidateSet TopNeighbors(const EmbeddingTable& table, std::span<const double> query,
                          std::size_t n, std::optional<std::size_t> freq_cap,
                          int workers) {
  if (n == 0) throw Error(ErrorCode::kValidation, "neighbour count must be >= 1");
  if (query.size() != table.dim()) {
    throw Error(ErrorCode::kCorruptTable,
                "query dimension " + std::to_string(query.size()) + " != table dimension " +
                    std::to_string(table.dim()));
  }
  double qn = 0.0;
  for (const double x : query) qn += x * x;
  qn = std::sqrt(qn);
  if (qn == 0.0) throw Error(ErrorCode::kValidation, "query vector has zero norm");

  const std::size_t rows = freq_cap ? std::min(*freq_cap, table.size()) : table.size();
  const std::size_t shards =
      std::max<std::size_t>(1, std::min<std::size_t>(rows / 1024 + 1,
                                                      static_cast<std::size_t>(std::max(1, workers))));
  std::vector<std::vector<Candidate>> partial(shards);
  std::vector<std::size_t> zero(shards, 0);
  ParallelFor(shards, workers, [&](std::size_t s) {
    const std::size_t begin = rows * s / shards;
    const std::size_t end = rows * (s + 1) / shards;
    auto& out = partial[s];
    for (std::size_t i = begin; i < end; ++i) {
      if (table.norm(i) == 0.0) {
        ++zero[s];
        continue;
      }
      out.push_back({table.term(i), Cosine(table, i, query, qn)});
    }
    const std::size_t keep = std::min(n, out.size());
    std::partial_sort(out.begin(), out.begin() + keep, out.end(), CandidateBefore);
    out.resize(keep);
  });

  CandidateSet result;
  result.scanned = rows;
  for (std::size_t s = 0; s < shards; ++s) {
    result.zero_norm_excluded += zero[s];
    result.entries.insert(result.entries.end(), partial[s].begin(), partial[s].end());
  }
  std::sort(result.entries.begin(), result.entries.end(), CandidateBefore);
  if (result.entries.size() > n) result.entries.resize(n);
  if (result.zero_norm_excluded > 0) {
    Log().warn("skipped {} zero-norm embedding rows", result.zero_norm_excluded);
  }
  return result;
}

Expansion ExpandS2v(const EmbeddingTable& table, const SeedSet& seeds, std::size_t n,
                    std::optional<std::size_t> freq_cap, int workers) {
  const auto query = MeanSeedVector(table, seeds);
  const auto set = TopNeighbors(table, query, n, freq_cap, workers);
  Expansion out;
  out.method = "s2v";
  for (const auto& c : set.entries) out.entries.push_back({c.term, c.cosine});
  out.metadata["candidates"] = n;
  out.metadata["scanned"] = set.scanned;
  out.metadata["zero_norm_excluded"] = set.zero_norm_excluded;
  return out;
}

}  // namespace tse
