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

// Exercises the shared library strictly through its C header.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "temp_dir.h"
#include "nlohmann/json.hpp"
#include "tse/tse.h"

namespace {

std::string Take(char* s) {
  std::string out = s ? s : "";
  tse_string_free(s);
  return out;
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override {
    tse_set_log_level("off");
    ASSERT_EQ(tse_synth_write(dir_.path().c_str(),
                              R"({"categories": 3, "members": 12, "total_sentences": 500})"),
              TSE_OK)
        << tse_last_error();
    ASSERT_EQ(tse_corpus_build_file(dir_.file("corpus.txt").c_str(), 1, &corpus_), TSE_OK);
    ASSERT_EQ(tse_backend_mock_file(dir_.file("world.json").c_str(), &backend_), TSE_OK);
    ASSERT_EQ(tse_embeddings_load(dir_.file("embeddings.txt").c_str(), &emb_), TSE_OK);
    ASSERT_EQ(tse_gold_load(dir_.file("gold/cat0.txt").c_str(), &gold_), TSE_OK);
    res_ = {corpus_, backend_, emb_, nullptr, 0};
  }
  void TearDown() override {
    tse_gold_free(gold_);
    tse_embeddings_free(emb_);
    tse_backend_free(backend_);
    tse_corpus_free(corpus_);
  }
  std::vector<std::string> GoldTerms() {
    std::ifstream in(dir_.file("gold/cat0.txt"));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') out.push_back(line.substr(0, line.find('\t')));
    }
    return out;
  }

  tse_test::TempDir dir_{"capi"};
  tse_corpus* corpus_ = nullptr;
  tse_backend* backend_ = nullptr;
  tse_embeddings* emb_ = nullptr;
  tse_gold* gold_ = nullptr;
  tse_resources res_{};
};

TEST_F(CApi, StatusNamesAndErrors) {
  EXPECT_STREQ(tse_status_name(TSE_OK), "ok");
  EXPECT_NE(std::string(tse_version()), "");
  tse_corpus* c = nullptr;
  EXPECT_EQ(tse_corpus_build_file("/nonexistent/corpus.txt", 1, &c), TSE_ERR_IO);
  EXPECT_EQ(c, nullptr);
  EXPECT_NE(std::string(tse_last_error()).find("/nonexistent"), std::string::npos);
  tse_backend* b = nullptr;
  EXPECT_EQ(tse_backend_mock_json("{}", &b), TSE_ERR_INVALID_WORLD);
  EXPECT_EQ(tse_set_log_level("loud"), TSE_ERR_VALIDATION);
  const char* empty_lines[] = {"", " "};
  EXPECT_EQ(tse_corpus_build_lines(empty_lines, 2, 1, &c), TSE_ERR_EMPTY_CORPUS);
}

TEST_F(CApi, CorpusAndBackendBasics) {
  size_t sentences = 0, tokens = 0, types = 0;
  ASSERT_EQ(tse_corpus_stats(corpus_, &sentences, &tokens, &types), TSE_OK);
  EXPECT_GE(sentences, 500u);
  EXPECT_GT(tokens, sentences);
  const auto path = dir_.file("corpus.idx");
  ASSERT_EQ(tse_corpus_save(corpus_, path.c_str()), TSE_OK);
  tse_corpus* loaded = nullptr;
  ASSERT_EQ(tse_corpus_load(path.c_str(), &loaded), TSE_OK);
  const auto term = GoldTerms()[0];
  size_t a = 0, b = 0;
  ASSERT_EQ(tse_corpus_count_occurrences(corpus_, term.c_str(), &a), TSE_OK);
  ASSERT_EQ(tse_corpus_count_occurrences(loaded, term.c_str(), &b), TSE_OK);
  EXPECT_EQ(a, b);
  EXPECT_GT(a, 0u);
  tse_corpus_free(loaded);

  char* info = nullptr;
  ASSERT_EQ(tse_backend_info(backend_, &info), TSE_OK);
  EXPECT_EQ(nlohmann::json::parse(Take(info))["max_top_q"], 0);
  int in_vocab = 0;
  ASSERT_EQ(tse_backend_contains(backend_, term.c_str(), &in_vocab), TSE_OK);
  EXPECT_EQ(in_vocab, 1);
  char* response = nullptr;
  ASSERT_EQ(tse_backend_complete(
                backend_,
                R"({"tokens": ["x", "[MASK]"], "mask_index": 1, "top_q": 3, "terms_of_interest": []})",
                &response),
            TSE_OK);
  EXPECT_EQ(nlohmann::json::parse(Take(response))["top"].size(), 3u);
  EXPECT_EQ(tse_backend_complete(backend_, R"({"tokens": []})", &response),
            TSE_ERR_VALIDATION);
}

TEST_F(CApi, ServerAndHttpBackendRoundTrip) {
  tse_server* server = nullptr;
  ASSERT_EQ(tse_server_start(backend_, "127.0.0.1", 0, 2, &server), TSE_OK);
  const std::string url = "http://127.0.0.1:" + std::to_string(tse_server_port(server));
  tse_backend* http = nullptr;
  ASSERT_EQ(tse_backend_http(url.c_str(), 2000, 4, &http), TSE_OK) << tse_last_error();
  tse_backend* cached = nullptr;
  ASSERT_EQ(tse_backend_cached(http, dir_.file("cache.jsonl").c_str(), &cached), TSE_OK);

  const char* req =
      R"({"tokens": ["x", "[MASK]"], "mask_index": 1, "top_q": 4, "terms_of_interest": ["zz"]})";
  char* direct = nullptr;
  char* remote = nullptr;
  ASSERT_EQ(tse_backend_complete(backend_, req, &direct), TSE_OK);
  ASSERT_EQ(tse_backend_complete(cached, req, &remote), TSE_OK);
  const auto dj = nlohmann::json::parse(Take(direct));
  const auto rj = nlohmann::json::parse(Take(remote));
  EXPECT_EQ(dj["top"], rj["top"]);
  EXPECT_EQ(dj["lookup"], rj["lookup"]);
  tse_backend_free(cached);
  tse_backend_free(http);
  tse_server_free(server);
  EXPECT_TRUE(std::filesystem::exists(dir_.file("cache.jsonl")));
}

TEST_F(CApi, MineExpandAndScore) {
  const auto terms = GoldTerms();
  const char* seeds[] = {terms[0].c_str(), terms[1].c_str(), terms[2].c_str()};
  const char* cfg = R"({"method": "mpb1", "patterns": 10})";
  char* resolved = nullptr;
  ASSERT_EQ(tse_config_resolve(cfg, &resolved), TSE_OK);
  EXPECT_EQ(nlohmann::json::parse(Take(resolved))["diversity"], 0.5);
  EXPECT_EQ(tse_config_resolve(R"({"method": "nope"})", &resolved), TSE_ERR_VALIDATION);

  tse_patterns* pats = nullptr;
  ASSERT_EQ(tse_mine(&res_, cfg, seeds, 3, &pats), TSE_OK) << tse_last_error();
  EXPECT_GT(tse_patterns_size(pats), 0u);
  const auto ppath = dir_.file("patterns.jsonl");
  ASSERT_EQ(tse_patterns_write(pats, ppath.c_str(), cfg), TSE_OK);
  tse_patterns* back = nullptr;
  ASSERT_EQ(tse_patterns_read(ppath.c_str(), &back), TSE_OK);
  EXPECT_EQ(tse_patterns_size(back), tse_patterns_size(pats));

  tse_expansion* a = nullptr;
  tse_expansion* b = nullptr;
  ASSERT_EQ(tse_expand(&res_, cfg, seeds, 3, nullptr, 50, &a, nullptr), TSE_OK);
  ASSERT_EQ(tse_expand_with_patterns(&res_, cfg, back, nullptr, 50, &b), TSE_OK);
  ASSERT_EQ(tse_expansion_size(a), 50u);
  ASSERT_EQ(tse_expansion_size(b), 50u);
  for (size_t i = 0; i < 50; ++i) {
    EXPECT_STREQ(tse_expansion_term(a, i), tse_expansion_term(b, i));
    EXPECT_EQ(tse_expansion_score(a, i), tse_expansion_score(b, i));
  }
  double ap = 0.0;
  ASSERT_EQ(tse_average_precision(a, gold_, 0, &ap), TSE_OK);
  EXPECT_GT(ap, 0.8);
  const auto epath = dir_.file("expansion.jsonl");
  ASSERT_EQ(tse_expansion_write(a, epath.c_str(), cfg), TSE_OK);
  tse_expansion* read = nullptr;
  ASSERT_EQ(tse_expansion_read(epath.c_str(), &read), TSE_OK);
  EXPECT_EQ(tse_expansion_size(read), 50u);

  const char* oov[] = {terms[0].c_str(), "qqqq", terms[1].c_str()};
  tse_expansion* bad = nullptr;
  EXPECT_EQ(tse_expand(&res_, cfg, oov, 3, nullptr, 50, &bad, nullptr), TSE_ERR_OOV_SEED);
  EXPECT_NE(std::string(tse_last_error()).find("qqqq"), std::string::npos);

  tse_expansion_free(read);
  tse_expansion_free(a);
  tse_expansion_free(b);
  tse_patterns_free(back);
  tse_patterns_free(pats);
}

TEST_F(CApi, Reports) {
  char* report = nullptr;
  ASSERT_EQ(tse_evaluate(&res_, R"({"method": "mpb1", "patterns": 10, "trials": 2})", gold_,
                         &report),
            TSE_OK)
      << tse_last_error();
  const std::string json = Take(report);
  const auto j = nlohmann::json::parse(json);
  EXPECT_EQ(j["trials"].size(), 2u);
  char* text = nullptr;
  ASSERT_EQ(tse_report_render(json.c_str(), &text), TSE_OK);
  EXPECT_NE(Take(text).find("mpb1"), std::string::npos);

  ASSERT_EQ(tse_grid(&res_,
                     R"({"method": "mpb1", "trials": 1, "sent_counts": [5, 20],
                         "patt_counts": [2, 10]})",
                     gold_, &report),
            TSE_OK)
      << tse_last_error();
  const auto grid = nlohmann::json::parse(Take(report));
  EXPECT_TRUE(grid["map"][1][0].is_null());

  ASSERT_EQ(tse_sweep_q(&res_, R"({"method": "mpb2o", "trials": 1, "q_values": [1, 10]})",
                        gold_, &report),
            TSE_OK)
      << tse_last_error();
  EXPECT_EQ(nlohmann::json::parse(Take(report))["map"].size(), 2u);

  ASSERT_EQ(tse_subset(&res_, R"({"method": "mpb1", "patterns": 5, "trials": 1})", gold_,
                       gold_, &report),
            TSE_OK);
  const auto sub = nlohmann::json::parse(Take(report));
  EXPECT_EQ(sub["subset_ap"], sub["superset_ap"]);
  EXPECT_EQ(tse_evaluate(&res_, R"({"trials": 0, "bogus": 1})", gold_, &report),
            TSE_ERR_VALIDATION);
}

}  // namespace
