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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.h"
#include "oracles.h"
#include "tse/candidates.h"
#include "tse/error.h"
#include "tse/mock_lm.h"
#include "tse/mpb1.h"
#include "tse/mpb2.h"
#include "tse/synthetic.h"

namespace tse {
namespace {

IndicativePatternSet Handmade(const std::vector<std::string>& texts,
                              const std::vector<double>& weights) {
  IndicativePatternSet set;
  set.seeds = {"dog", "cat"};
  for (const auto& t : texts) {
    ScoredPattern p;
    p.pattern = MaskedPattern::FromText(t);
    p.max_rank = 1;
    set.patterns.push_back(p);
  }
  set.weights = weights;
  return set;
}

std::map<std::string, double> LogProbs(const MockBackend& lm, const std::string& text) {
  std::map<std::string, double> out;
  for (const auto& e : lm.Distribution(MaskedPattern::FromText(text))) {
    out[e.term] = e.logprob;
  }
  return out;
}

TEST(Mpb1, TwoPatternProductOfExperts) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto set = Handmade({"my pet [MASK] sleeps .", "i saw a [MASK] ."}, {0.8, 0.2});
  Mpb1Options options;
  options.top_n = 1000;
  const auto out = ScoreVocabTerms(lm, set, options);
  ASSERT_EQ(out.size(), lm.vocabulary().size());
  const auto a = LogProbs(lm, "my pet [MASK] sleeps .");
  const auto b = LogProbs(lm, "i saw a [MASK] .");
  for (const auto& e : out.entries) {
    EXPECT_NEAR(e.score, 0.8 * a.at(e.term) + 0.2 * b.at(e.term), 1e-12) << e.term;
  }
  EXPECT_EQ(out.entries[0].term, "dog");
  EXPECT_EQ(out.metadata["truncated_distributions"], false);
  EXPECT_EQ(out.metadata["floored_terms"], 0);
}

TEST(Mpb1, MatchesRecomputationOnSyntheticWorld) {
  SynthOptions opts;
  opts.total_sentences = 600;
  const auto sw = GenerateSyntheticWorld(opts);
  const MockBackend lm(sw.world);
  const auto index = tse_test::IndexFromLines(sw.corpus);
  const SeedSet seeds({sw.gold[0].Representatives()[0], sw.gold[0].Representatives()[1],
                       sw.gold[0].Representatives()[2]});
  MiningConfig mining;
  mining.sentences_per_seed = 50;
  mining.patterns = 12;
  const auto set = MineIndicativePatterns(index, lm, seeds, mining);
  Mpb1Options options;
  options.top_n = 100;
  const auto out = ScoreVocabTerms(lm, set, options);
  ASSERT_EQ(out.size(), 100u);
  std::vector<std::map<std::string, double>> dists;
  for (const auto& p : set.patterns) dists.push_back(LogProbs(lm, p.pattern.Text()));
  for (std::size_t r = 0; r < out.size(); ++r) {
    double expect = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      expect += set.weights[i] * dists[i].at(out.entries[r].term);
    }
    EXPECT_NEAR(out.entries[r].score, expect, 1e-9);
    if (r > 0) EXPECT_GE(out.entries[r - 1].score, out.entries[r].score);
  }
  options.workers = 4;
  EXPECT_EQ(ScoreVocabTerms(lm, set, options).entries, out.entries);
}

TEST(Mpb1, TruncatedBackendNeedsFallback) {
  auto world = tse_test::TinyWorld();
  world.max_top_q = 5;
  const MockBackend lm(world);
  const auto set = Handmade({"my pet [MASK] sleeps .", "we flew to [MASK] today ."},
                            {0.8, 0.2});
  Mpb1Options options;
  try {
    ScoreVocabTerms(lm, set, options);
    ADD_FAILURE() << "expected a capability error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapability);
  }
  options.fallback_top_q = 5;
  const auto out = ScoreVocabTerms(lm, set, options);
  const double floor = std::log(1.0 / (10.0 * 24.0));
  EXPECT_DOUBLE_EQ(TruncationFloor(24), floor);
  const auto a = lm.Distribution(MaskedPattern::FromText("my pet [MASK] sleeps ."));
  const auto b = lm.Distribution(MaskedPattern::FromText("we flew to [MASK] today ."));
  auto in_top = [](const std::vector<CompletionEntry>& d, const std::string& t)
      -> std::optional<double> {
    for (std::size_t i = 0; i < 5; ++i) {
      if (d[i].term == t) return d[i].logprob;
    }
    return std::nullopt;
  };
  for (const auto& e : out.entries) {
    const double expect = 0.8 * in_top(a, e.term).value_or(floor) +
                          0.2 * in_top(b, e.term).value_or(floor);
    EXPECT_NEAR(e.score, expect, 1e-12) << e.term;
  }
  EXPECT_EQ(out.metadata["truncated_distributions"], true);
  EXPECT_EQ(out.metadata["top_q"], 5);
  EXPECT_GT(out.metadata["floored_terms"].get<int>(), 0);
}

TEST(Mpb1, RejectsEmptyPatternSet) {
  const MockBackend lm(tse_test::TinyWorld());
  IndicativePatternSet empty;
  EXPECT_THROW(ScoreVocabTerms(lm, empty, {}), Error);
}

TEST(Baseline, FirstCandidatesWithUniformWeights) {
  const auto index = tse_test::TinyCorpus();
  const SeedSet seeds({"dog", "cat"});
  const auto set = BaselinePatternSet(index, seeds, 10, 3);
  ASSERT_EQ(set.size(), 3u);
  const auto all = CollectCandidates(index, seeds, 10);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(set.patterns[i].pattern, all[i].pattern);
    EXPECT_DOUBLE_EQ(set.weights[i], 1.0 / 3.0);
  }
  const MockBackend lm(tse_test::TinyWorld());
  MiningConfig mining;
  mining.sentences_per_seed = 10;
  mining.patterns = 3;
  const auto out = ExpandBaseline(lm, index, seeds, mining, {});
  EXPECT_EQ(out.method, "bb");
  EXPECT_EQ(out.entries[0].term, "dog");
}

// ---- embeddings and neighbours ----

EmbeddingTable RandomTable(std::size_t rows, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> n(0.0f, 1.0f);
  std::vector<std::string> terms;
  std::vector<std::vector<float>> vecs;
  for (std::size_t i = 0; i < rows; ++i) {
    terms.push_back("w" + std::to_string(i));
    std::vector<float> v(dim);
    for (auto& x : v) x = n(rng);
    vecs.push_back(std::move(v));
  }
  return EmbeddingTable::FromRows(terms, vecs);
}

TEST(Neighbors, MatchExhaustiveScan) {
  const auto table = RandomTable(10000, 24, 5);
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int probe = 0; probe < 5; ++probe) {
    std::vector<double> q(24);
    for (auto& x : q) x = n(rng);
    double qn = 0.0;
    for (const double x : q) qn += x * x;
    for (const std::optional<std::size_t> cap :
         {std::optional<std::size_t>{}, std::optional<std::size_t>{3000}}) {
      const auto expect = tse_test::ExhaustiveNeighbors(table, q, 50, cap);
      for (const int workers : {1, 3, 8}) {
        const auto got = TopNeighbors(table, q, 50, cap, workers);
        ASSERT_EQ(got.entries.size(), expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
          EXPECT_EQ(got.entries[i].term, expect[i].term);
          EXPECT_NEAR(got.entries[i].cosine, expect[i].cosine, 1e-12);
        }
        EXPECT_EQ(got.scanned, cap ? 3000u : 10000u);
      }
    }
  }
}

TEST(Neighbors, TiesZeroNormsAndSeeds) {
  const auto table = EmbeddingTable::FromRows(
      {"b", "a", "zero", "c", "far"},
      {{1, 0}, {2, 0}, {0, 0}, {1, 1}, {-1, 0}});
  const std::vector<double> q{1.0, 0.0};
  const auto got = TopNeighbors(table, q, 10);
  ASSERT_EQ(got.entries.size(), 4u);
  EXPECT_EQ(got.entries[0].term, "a");  // equal cosine 1, term order
  EXPECT_EQ(got.entries[1].term, "b");
  EXPECT_EQ(got.entries[2].term, "c");
  EXPECT_NEAR(got.entries[2].cosine, 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(got.entries[3].term, "far");
  EXPECT_EQ(got.zero_norm_excluded, 1u);

  const auto mean = MeanSeedVector(table, SeedSet({"b", "c"}));
  EXPECT_DOUBLE_EQ(mean[0], 1.0);
  EXPECT_DOUBLE_EQ(mean[1], 0.5);
  try {
    MeanSeedVector(table, SeedSet({"b", "ghost"}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingSeed);
    EXPECT_NE(std::string(e.what()).find("ghost"), std::string::npos);
  }
  const auto s2v = ExpandS2v(table, SeedSet({"a", "b"}), 2);
  EXPECT_EQ(s2v.method, "s2v");
  EXPECT_EQ(s2v.size(), 2u);
}

TEST(Embeddings, TextFormatParsing) {
  std::istringstream in("3 2\nNew_York|PROPN\t1 0\nduck|NOUN\t0 1\nnew_york|NOUN\t5 5\n");
  const auto table = EmbeddingTable::Load(in);
  EXPECT_EQ(table.dim(), 2u);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.duplicates_dropped(), 1u);
  ASSERT_TRUE(table.Find("new york").has_value());
  EXPECT_EQ(table.vector(*table.Find("New York"))[0], 1.0f);
  std::ostringstream out;
  table.Save(out);
  std::istringstream back(out.str());
  const auto again = EmbeddingTable::Load(back);
  EXPECT_EQ(again.size(), 2u);
  EXPECT_EQ(again.term(1), "duck");

  std::istringstream bad("a\t1 2\nb\t1\n");
  try {
    EmbeddingTable::Load(bad);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorruptTable);
  }
  std::istringstream junk("a\t1 x\n");
  EXPECT_THROW(EmbeddingTable::Load(junk), Error);
}

// ---- pattern similarity ----

std::set<std::string> TopSet(const MockBackend& lm, const MaskedPattern& p, std::size_t q) {
  std::set<std::string> out;
  const auto d = lm.Distribution(p);
  for (std::size_t i = 0; i < q && i < d.size(); ++i) out.insert(d[i].term);
  return out;
}

double Overlap(const std::set<std::string>& a, const std::set<std::string>& b,
               std::size_t q) {
  std::size_t n = 0;
  for (const auto& t : a) n += b.count(t);
  return static_cast<double>(n) / static_cast<double>(q);
}

TEST(Similarity, BoundsAndIdentity) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto pet = MaskedPattern::FromText("my pet [MASK] sleeps .");
  const auto fly = MaskedPattern::FromText("we flew to [MASK] today .");
  EXPECT_DOUBLE_EQ(PatternSimilarity(lm, pet, pet, 4), 1.0);
  EXPECT_DOUBLE_EQ(PatternSimilarity(lm, pet, fly, 3), 0.0);
  for (std::size_t q = 1; q <= 24; ++q) {
    const double s = PatternSimilarity(lm, pet, fly, q);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_DOUBLE_EQ(s, PatternSimilarity(lm, fly, pet, q));
  }
  EXPECT_DOUBLE_EQ(PatternSimilarity(lm, pet, fly, 24), 1.0);
  EXPECT_THROW(PatternSimilarity(lm, pet, fly, 0), Error);
}

TEST(Mpb2, HandComputedScore) {
  const auto index = tse_test::TinyCorpus();
  const MockBackend lm(tse_test::TinyWorld());
  const auto set = Handmade({"my pet [MASK] sleeps .", "we flew to [MASK] today ."},
                            {0.8, 0.2});
  const std::size_t q = 4;
  const auto occ = CollectPats(index, "Horse", 20);
  EXPECT_EQ(occ.term, "horse");
  ASSERT_EQ(occ.patterns.size(), 3u);
  double expect = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto mine = TopSet(lm, set.patterns[i].pattern, q);
    double best = 0.0;
    for (const auto& p : occ.patterns) best = std::max(best, Overlap(mine, TopSet(lm, p, q), q));
    expect += set.weights[i] * best;
  }
  SimilarityConfig cfg;
  cfg.q = q;
  // "my pet horse sleeps ." reproduces the first pattern exactly.
  EXPECT_GE(expect, 0.8);
  EXPECT_NEAR(ScoreCandidate(lm, set, occ, cfg), expect, 1e-12);

  const auto none = CollectPats(index, "idea", 20);
  EXPECT_TRUE(none.patterns.empty());
  EXPECT_EQ(ScoreCandidate(lm, set, none, cfg), 0.0);

  Mpb2Options options;
  options.similarity = cfg;
  const auto out =
      ExpandMpb2(lm, index, set, {"horse", "Paris", "idea", "HORSE", "new york"}, options);
  EXPECT_EQ(out.method, "mpb2");
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out.entries[0].term, "horse");
  EXPECT_NEAR(out.entries[0].score, expect, 1e-12);
  EXPECT_EQ(out.entries.back().term, "idea");
  EXPECT_EQ(out.metadata["candidates_without_occurrences"], 1);
  for (const auto& e : out.entries) {
    EXPECT_GE(e.score, 0.0);
    EXPECT_LE(e.score, 1.0 + 1e-12);
  }
  options.workers = 4;
  EXPECT_EQ(ExpandMpb2(lm, index, set, {"horse", "Paris", "idea", "HORSE", "new york"},
                       options).entries,
            out.entries);
  EXPECT_THROW(ExpandMpb2(lm, index, set, {}, options), Error);
}

TEST(Expansion, JsonlRoundTrip) {
  Expansion e;
  e.method = "mpb1";
  e.entries = {{"b", 2.0}, {"a", 0.5}, {"c", 0.5}};
  e.metadata["patterns"] = 3;
  std::ostringstream out;
  WriteExpansionJsonl(out, e, nlohmann::json{{"q", 5}});
  std::istringstream in(out.str());
  const auto back = ReadExpansionJsonl(in);
  EXPECT_EQ(back.method, "mpb1");
  EXPECT_EQ(back.entries, e.entries);
  EXPECT_EQ(back.metadata, e.metadata);

  std::vector<ExpansionEntry> r = {{"z", 1.0}, {"y", 3.0}, {"x", 1.0}, {"w", 0.0}};
  RankAndTruncate(r, 3);
  EXPECT_EQ(r, (std::vector<ExpansionEntry>{{"y", 3.0}, {"x", 1.0}, {"z", 1.0}}));
}

}  // namespace
}  // namespace tse
