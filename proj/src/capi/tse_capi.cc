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

#include "tse/tse.h"

#include <fstream>
#include <memory>
#include <new>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tse/cache.h"
#include "tse/candidates.h"
#include "tse/corpus.h"
#include "tse/error.h"
#include "tse/eval.h"
#include "tse/experiments.h"
#include "tse/log.h"
#include "tse/mining.h"
#include "tse/mock_lm.h"
#include "tse/mpb1.h"
#include "tse/mpb2.h"
#include "tse/synthetic.h"
#include "tse/wire.h"

struct tse_corpus {
  tse::CorpusIndex index;
};
struct tse_backend {
  std::shared_ptr<const tse::MlmBackend> backend;
};
struct tse_embeddings {
  tse::EmbeddingTable table;
};
struct tse_gold {
  tse::GoldSet gold;
};
struct tse_patterns {
  tse::IndicativePatternSet set;
};
struct tse_expansion {
  tse::Expansion expansion;
};
struct tse_server {
  std::unique_ptr<tse::MlmServer> server;
};

namespace {

thread_local std::string last_error;

tse_status StatusOf(tse::ErrorCode code) {
  return static_cast<tse_status>(static_cast<int>(code) + 1);
}

tse_status Fail(tse_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
tse_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return TSE_OK;
  } catch (const tse::Error& e) {
    return Fail(StatusOf(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return Fail(TSE_ERR_VALIDATION, std::string("malformed JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return Fail(TSE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(TSE_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(TSE_ERR_INTERNAL, "unknown failure");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw tse::Error(tse::ErrorCode::kValidation, what);
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  s.copy(out, s.size());
  out[s.size()] = '\0';
  return out;
}

nlohmann::json ParseObject(const char* text) {
  if (text == nullptr || *text == '\0') return nlohmann::json::object();
  auto j = nlohmann::json::parse(text);
  Require(j.is_object(), "configuration must be a JSON object");
  return j;
}

const std::set<std::string>& ExperimentKeys() {
  static const std::set<std::string> keys = {"trials",      "seed_size",   "rng",
                                             "sent_counts", "patt_counts", "q_values"};
  return keys;
}

const std::set<std::string>& MethodKeys() {
  static const std::set<std::string> keys = {
      "method",     "sentences", "patterns", "diversity",      "max_rank_cap", "q",
      "max_occ",    "candidates", "freq_cap", "top_n",         "fallback_top_q",
      "workers"};
  return keys;
}

tse::MethodConfig MethodFrom(const nlohmann::json& j) {
  nlohmann::json method = nlohmann::json::object();
  std::vector<std::string> unknown;
  for (const auto& [key, value] : j.items()) {
    if (MethodKeys().count(key)) {
      method[key] = value;
    } else if (!ExperimentKeys().count(key)) {
      unknown.push_back(key);
    }
  }
  if (!unknown.empty()) {
    std::string msg = "unknown configuration keys:";
    for (const auto& k : unknown) msg += " " + k;
    throw tse::Error(tse::ErrorCode::kValidation, msg);
  }
  return tse::MethodConfig::FromJson(method);
}

std::vector<std::size_t> CountList(const nlohmann::json& j, const char* key,
                                   std::vector<std::size_t> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j[key];
  Require(v.is_array(), "count lists must be arrays");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    Require(x.is_number_unsigned() && x.get<std::size_t>() > 0,
            "count lists hold positive integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

tse::EvalOptions EvalFrom(const nlohmann::json& j) {
  tse::EvalOptions options;
  std::vector<std::string> problems;
  auto count = [&](const char* key, auto& field) {
    if (!j.contains(key)) return;
    if (j[key].is_number_unsigned() && j[key].template get<std::uint64_t>() > 0) {
      field = j[key].template get<std::remove_reference_t<decltype(field)>>();
    } else {
      problems.push_back(std::string(key) + " must be a positive integer");
    }
  };
  count("trials", options.trials);
  count("seed_size", options.seed_size);
  if (j.contains("rng")) {
    if (j["rng"].is_number_unsigned()) {
      options.rng_seed = j["rng"].get<std::uint64_t>();
    } else {
      problems.push_back("rng must be a non-negative integer");
    }
  }
  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw tse::Error(tse::ErrorCode::kValidation, msg);
  }
  return options;
}

tse::Resources ResourcesFrom(const tse_resources* r) {
  tse::Resources out;
  if (r == nullptr) return out;
  if (r->corpus) out.corpus = &r->corpus->index;
  if (r->backend) out.backend = r->backend->backend.get();
  if (r->embeddings) out.embeddings = &r->embeddings->table;
  for (std::size_t i = 0; i < r->candidate_count; ++i) {
    Require(r->candidates[i] != nullptr, "null candidate");
    out.candidates.emplace_back(r->candidates[i]);
  }
  return out;
}

std::vector<std::string> StringList(const char* const* items, std::size_t count) {
  Require(items != nullptr || count == 0, "null list");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    Require(items[i] != nullptr, "null list entry");
    out.emplace_back(items[i]);
  }
  return out;
}

std::ofstream OpenOut(const char* path) {
  Require(path != nullptr, "null path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tse::Error(tse::ErrorCode::kIo, std::string("cannot write ") + path);
  return out;
}

std::ifstream OpenIn(const char* path) {
  Require(path != nullptr, "null path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tse::Error(tse::ErrorCode::kIo, std::string("cannot open ") + path);
  return in;
}

tse::TokenizerConfig Tokenizer(int lowercase) {
  tse::TokenizerConfig config;
  config.lowercase = lowercase != 0;
  return config;
}

}  // namespace

extern "C" {

const char* tse_version(void) { return "0.1.0"; }

const char* tse_status_name(tse_status status) {
  if (status == TSE_OK) return "ok";
  if (status < TSE_OK || status > TSE_ERR_INTERNAL) return "unknown";
  return tse::ErrorCodeName(static_cast<tse::ErrorCode>(static_cast<int>(status) - 1));
}

const char* tse_last_error(void) { return last_error.c_str(); }

void tse_string_free(char* s) { delete[] s; }

tse_status tse_set_log_level(const char* level) {
  return Guard([&] {
    Require(level != nullptr, "null level");
    const std::string l = level;
    static const std::pair<const char*, spdlog::level::level_enum> kLevels[] = {
        {"debug", spdlog::level::debug}, {"info", spdlog::level::info},
        {"warn", spdlog::level::warn},   {"error", spdlog::level::err},
        {"off", spdlog::level::off}};
    for (const auto& [name, value] : kLevels) {
      if (l == name) {
        tse::Log().set_level(value);
        return;
      }
    }
    throw tse::Error(tse::ErrorCode::kValidation,
                     "unknown log level '" + l + "' (debug, info, warn, error, off)");
  });
}

tse_status tse_corpus_build_file(const char* path, int lowercase, tse_corpus** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new tse_corpus{tse::CorpusIndex::BuildFromFile(path, Tokenizer(lowercase))};
  });
}

tse_status tse_corpus_build_lines(const char* const* lines, size_t count, int lowercase,
                                  tse_corpus** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    std::string text;
    for (const auto& line : StringList(lines, count)) text += line + "\n";
    std::istringstream in(text);
    *out = new tse_corpus{tse::CorpusIndex::Build(in, Tokenizer(lowercase))};
  });
}

tse_status tse_corpus_load(const char* index_path, tse_corpus** out) {
  return Guard([&] {
    Require(index_path != nullptr && out != nullptr, "null argument");
    *out = new tse_corpus{tse::CorpusIndex::Load(std::string(index_path))};
  });
}

tse_status tse_corpus_save(const tse_corpus* corpus, const char* index_path) {
  return Guard([&] {
    Require(corpus != nullptr && index_path != nullptr, "null argument");
    corpus->index.Save(std::string(index_path));
  });
}

tse_status tse_corpus_stats(const tse_corpus* corpus, size_t* sentences, size_t* tokens,
                            size_t* types) {
  return Guard([&] {
    Require(corpus != nullptr, "null corpus");
    if (sentences) *sentences = corpus->index.sentence_count();
    if (tokens) *tokens = corpus->index.token_count();
    if (types) *types = corpus->index.type_count();
  });
}

tse_status tse_corpus_count_occurrences(const tse_corpus* corpus, const char* term,
                                        size_t* count) {
  return Guard([&] {
    Require(corpus != nullptr && term != nullptr && count != nullptr, "null argument");
    *count = corpus->index.FindOccurrences(term).size();
  });
}

void tse_corpus_free(tse_corpus* corpus) { delete corpus; }

tse_status tse_backend_mock_file(const char* world_path, tse_backend** out) {
  return Guard([&] {
    Require(world_path != nullptr && out != nullptr, "null argument");
    *out = new tse_backend{
        std::make_shared<tse::MockBackend>(tse::MockWorld::LoadFile(world_path))};
  });
}

tse_status tse_backend_mock_json(const char* world_json, tse_backend** out) {
  return Guard([&] {
    Require(world_json != nullptr && out != nullptr, "null argument");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(world_json);
    } catch (const nlohmann::json::exception& e) {
      throw tse::Error(tse::ErrorCode::kInvalidWorld, e.what());
    }
    *out = new tse_backend{std::make_shared<tse::MockBackend>(tse::MockWorld::FromJson(j))};
  });
}

tse_status tse_backend_http(const char* base_url, int timeout_ms, int max_in_flight,
                            tse_backend** out) {
  return Guard([&] {
    Require(base_url != nullptr && out != nullptr, "null argument");
    tse::HttpBackendOptions options;
    if (timeout_ms > 0) options.timeout = std::chrono::milliseconds(timeout_ms);
    if (max_in_flight > 0) options.max_in_flight = max_in_flight;
    *out = new tse_backend{std::make_shared<tse::HttpBackend>(base_url, options)};
  });
}

tse_status tse_backend_cached(const tse_backend* inner, const char* cache_file,
                              tse_backend** out) {
  return Guard([&] {
    Require(inner != nullptr && out != nullptr, "null argument");
    std::optional<std::string> path;
    if (cache_file != nullptr) path = cache_file;
    *out = new tse_backend{std::make_shared<tse::CachingBackend>(inner->backend, path)};
  });
}

tse_status tse_backend_info(const tse_backend* backend, char** info_json) {
  return Guard([&] {
    Require(backend != nullptr && info_json != nullptr, "null argument");
    *info_json = CopyString(tse::wire::InfoToJson(backend->backend->Info()).dump());
  });
}

tse_status tse_backend_contains(const tse_backend* backend, const char* term,
                                int* in_vocab) {
  return Guard([&] {
    Require(backend != nullptr && term != nullptr && in_vocab != nullptr, "null argument");
    *in_vocab = backend->backend->Contains(term) ? 1 : 0;
  });
}

tse_status tse_backend_complete(const tse_backend* backend, const char* request_json,
                                char** response_json) {
  return Guard([&] {
    Require(backend != nullptr && request_json != nullptr && response_json != nullptr,
            "null argument");
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(request_json);
    } catch (const nlohmann::json::exception& e) {
      throw tse::Error(tse::ErrorCode::kValidation, e.what());
    }
    const auto request = tse::wire::RequestFromJson(body);
    const auto completion =
        backend->backend->Complete(request.pattern, request.top_q, request.terms);
    *response_json = CopyString(tse::wire::CompletionToJson(completion).dump());
  });
}

void tse_backend_free(tse_backend* backend) { delete backend; }

tse_status tse_server_start(const tse_backend* backend, const char* host, int port,
                            int threads, tse_server** out) {
  return Guard([&] {
    Require(backend != nullptr && out != nullptr, "null argument");
    tse::ServerOptions options;
    if (threads > 0) options.threads = threads;
    auto server = std::make_unique<tse::MlmServer>(backend->backend, options);
    server->Start(host ? host : "127.0.0.1", port);
    *out = new tse_server{std::move(server)};
  });
}

int tse_server_port(const tse_server* server) { return server ? server->server->port() : 0; }

void tse_server_free(tse_server* server) {
  if (server == nullptr) return;
  server->server->Stop();
  delete server;
}

tse_status tse_embeddings_load(const char* path, tse_embeddings** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new tse_embeddings{tse::EmbeddingTable::LoadFile(path)};
  });
}

size_t tse_embeddings_size(const tse_embeddings* embeddings) {
  return embeddings ? embeddings->table.size() : 0;
}

void tse_embeddings_free(tse_embeddings* embeddings) { delete embeddings; }

tse_status tse_gold_load(const char* path, tse_gold** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new tse_gold{tse::GoldSet::LoadFile(path)};
  });
}

size_t tse_gold_size(const tse_gold* gold) { return gold ? gold->gold.size() : 0; }
const char* tse_gold_name(const tse_gold* gold) {
  return gold ? gold->gold.name().c_str() : "";
}
int tse_gold_is_open(const tse_gold* gold) { return gold && gold->gold.open() ? 1 : 0; }
void tse_gold_free(tse_gold* gold) { delete gold; }

tse_status tse_config_resolve(const char* config_json, char** resolved_json) {
  return Guard([&] {
    Require(resolved_json != nullptr, "null argument");
    const auto j = ParseObject(config_json);
    auto resolved = MethodFrom(j).ToJson();
    const auto options = EvalFrom(j);
    resolved["trials"] = options.trials;
    resolved["seed_size"] = options.seed_size;
    resolved["rng"] = options.rng_seed;
    for (const char* key : {"sent_counts", "patt_counts", "q_values"}) {
      if (j.contains(key)) resolved[key] = CountList(j, key, {});
    }
    *resolved_json = CopyString(resolved.dump());
  });
}

tse_status tse_mine(const tse_resources* resources, const char* config_json,
                    const char* const* seeds, size_t seed_count, tse_patterns** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const auto res = ResourcesFrom(resources);
    const auto config = MethodFrom(ParseObject(config_json));
    Require(res.corpus != nullptr && res.backend != nullptr,
            "mining requires a corpus and an LM backend");
    const tse::SeedSet seed_set(StringList(seeds, seed_count), res.corpus->config());
    *out = new tse_patterns{tse::MineIndicativePatterns(
        *res.corpus, *res.backend, seed_set, config.Mining(seed_set.size()))};
  });
}

tse_status tse_expand(const tse_resources* resources, const char* config_json,
                      const char* const* seeds, size_t seed_count, const tse_gold* oracle,
                      size_t top_n, tse_expansion** out, tse_patterns** patterns) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const auto res = ResourcesFrom(resources);
    const auto config = MethodFrom(ParseObject(config_json));
    const tse::TokenizerConfig tokenizer =
        res.corpus ? res.corpus->config() : tse::TokenizerConfig{};
    const tse::SeedSet seed_set(StringList(seeds, seed_count), tokenizer);
    const std::size_t n = top_n ? top_n : config.top_n.value_or(200);
    auto result =
        tse::RunMethod(res, config, seed_set, n, oracle ? &oracle->gold : nullptr);
    if (patterns != nullptr) {
      *patterns = result.patterns ? new tse_patterns{std::move(*result.patterns)} : nullptr;
    }
    *out = new tse_expansion{std::move(result.expansion)};
  });
}

tse_status tse_expand_with_patterns(const tse_resources* resources, const char* config_json,
                                    const tse_patterns* patterns, const tse_gold* oracle,
                                    size_t top_n, tse_expansion** out) {
  return Guard([&] {
    Require(out != nullptr && patterns != nullptr, "null argument");
    const auto res = ResourcesFrom(resources);
    const auto config = MethodFrom(ParseObject(config_json));
    tse::CheckResources(res, config, oracle != nullptr);
    const std::size_t n = top_n ? top_n : config.top_n.value_or(200);
    const auto& set = patterns->set;
    switch (config.method) {
      case tse::Method::kMpb1:
        *out = new tse_expansion{tse::ScoreVocabTerms(
            *res.backend, set, {n, config.fallback_top_q, config.workers})};
        return;
      case tse::Method::kMpb2:
      case tse::Method::kMpb2Oracle: {
        std::vector<std::string> candidates = res.candidates;
        if (res.embeddings != nullptr) {
          const auto s2v = tse::ExpandS2v(*res.embeddings, tse::SeedSet(set.seeds),
                                          config.candidates, config.freq_cap,
                                          config.workers);
          for (const auto& e : s2v.entries) candidates.push_back(e.term);
        }
        if (config.method == tse::Method::kMpb2Oracle) {
          for (auto& f : oracle->gold.AllForms()) candidates.push_back(std::move(f));
        }
        tse::Mpb2Options options;
        options.similarity = config.similarity;
        options.top_n = n;
        options.workers = config.workers;
        auto expansion = tse::ExpandMpb2(*res.backend, *res.corpus, set, candidates, options);
        expansion.method = std::string(tse::MethodName(config.method));
        *out = new tse_expansion{std::move(expansion)};
        return;
      }
      default:
        throw tse::Error(tse::ErrorCode::kValidation,
                         "expanding from mined patterns needs mpb1, mpb2 or mpb2o");
    }
  });
}

tse_status tse_patterns_read(const char* path, tse_patterns** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    auto in = OpenIn(path);
    *out = new tse_patterns{tse::ReadPatternsJsonl(in)};
  });
}

tse_status tse_patterns_write(const tse_patterns* patterns, const char* path,
                              const char* config_json) {
  return Guard([&] {
    Require(patterns != nullptr, "null argument");
    const auto config = ParseObject(config_json);
    auto out = OpenOut(path);
    tse::WritePatternsJsonl(out, patterns->set, nlohmann::json{{"config", config}});
    if (!out.flush()) throw tse::Error(tse::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

size_t tse_patterns_size(const tse_patterns* patterns) {
  return patterns ? patterns->set.size() : 0;
}

void tse_patterns_free(tse_patterns* patterns) { delete patterns; }

size_t tse_expansion_size(const tse_expansion* expansion) {
  return expansion ? expansion->expansion.size() : 0;
}

const char* tse_expansion_term(const tse_expansion* expansion, size_t i) {
  if (expansion == nullptr || i >= expansion->expansion.size()) return nullptr;
  return expansion->expansion.entries[i].term.c_str();
}

double tse_expansion_score(const tse_expansion* expansion, size_t i) {
  if (expansion == nullptr || i >= expansion->expansion.size()) return 0.0;
  return expansion->expansion.entries[i].score;
}

tse_status tse_expansion_write(const tse_expansion* expansion, const char* path,
                               const char* config_json) {
  return Guard([&] {
    Require(expansion != nullptr, "null argument");
    const auto config = ParseObject(config_json);
    auto out = OpenOut(path);
    tse::WriteExpansionJsonl(out, expansion->expansion, config);
    if (!out.flush()) throw tse::Error(tse::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

tse_status tse_expansion_read(const char* path, tse_expansion** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    auto in = OpenIn(path);
    *out = new tse_expansion{tse::ReadExpansionJsonl(in)};
  });
}

void tse_expansion_free(tse_expansion* expansion) { delete expansion; }

tse_status tse_average_precision(const tse_expansion* expansion, const tse_gold* gold,
                                 size_t cutoff, double* ap) {
  return Guard([&] {
    Require(expansion != nullptr && gold != nullptr && ap != nullptr, "null argument");
    std::optional<std::size_t> c;
    if (cutoff > 0) c = cutoff;
    *ap = tse::AveragePrecision(expansion->expansion, gold->gold, c);
  });
}

tse_status tse_evaluate(const tse_resources* resources, const char* config_json,
                        const tse_gold* gold, char** report_json) {
  return Guard([&] {
    Require(gold != nullptr && report_json != nullptr, "null argument");
    const auto j = ParseObject(config_json);
    const auto report =
        tse::Evaluate(ResourcesFrom(resources), MethodFrom(j), gold->gold, EvalFrom(j));
    *report_json = CopyString(report.ToJson().dump());
  });
}

tse_status tse_grid(const tse_resources* resources, const char* config_json,
                    const tse_gold* gold, char** report_json) {
  return Guard([&] {
    Require(gold != nullptr && report_json != nullptr, "null argument");
    const auto j = ParseObject(config_json);
    const auto report = tse::GridExperiment(
        ResourcesFrom(resources), MethodFrom(j), gold->gold,
        CountList(j, "sent_counts", {20, 100, 300, 1000, 2000, 4000}),
        CountList(j, "patt_counts", {1, 5, 10, 20, 40, 80, 160, 600}), EvalFrom(j));
    *report_json = CopyString(report.ToJson().dump());
  });
}

tse_status tse_sweep_q(const tse_resources* resources, const char* config_json,
                       const tse_gold* gold, char** report_json) {
  return Guard([&] {
    Require(gold != nullptr && report_json != nullptr, "null argument");
    const auto j = ParseObject(config_json);
    const auto report =
        tse::QSweep(ResourcesFrom(resources), MethodFrom(j), gold->gold,
                    CountList(j, "q_values", {1, 5, 50, 300, 700, 3000}), EvalFrom(j));
    *report_json = CopyString(report.ToJson().dump());
  });
}

tse_status tse_subset(const tse_resources* resources, const char* config_json,
                      const tse_gold* subset, const tse_gold* superset, char** report_json) {
  return Guard([&] {
    Require(subset != nullptr && superset != nullptr && report_json != nullptr,
            "null argument");
    const auto j = ParseObject(config_json);
    const auto report = tse::SubsetExperiment(ResourcesFrom(resources), MethodFrom(j),
                                              subset->gold, superset->gold, EvalFrom(j));
    *report_json = CopyString(report.ToJson().dump());
  });
}

tse_status tse_report_render(const char* report_json, char** text) {
  return Guard([&] {
    Require(report_json != nullptr && text != nullptr, "null argument");
    *text = CopyString(tse::RenderReportText(nlohmann::json::parse(report_json)));
  });
}

tse_status tse_synth_write(const char* dir, const char* options_json) {
  return Guard([&] {
    Require(dir != nullptr, "null directory");
    const auto j = ParseObject(options_json);
    tse::SynthOptions options;
    options.categories = j.value("categories", options.categories);
    options.members = j.value("members", options.members);
    options.noise_level = j.value("noise_level", options.noise_level);
    options.total_sentences = j.value("total_sentences", options.total_sentences);
    options.dim = j.value("dim", options.dim);
    options.seed = j.value("seed", options.seed);
    options.multiword_last = j.value("multiword_last", options.multiword_last);
    tse::WriteSyntheticWorld(tse::GenerateSyntheticWorld(options), dir);
  });
}

}  // extern "C"
