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

// Command-line front end. Every subcommand resolves one run configuration
// (defaults, then --config, then flags), embeds it in its artifacts and
// drives the library through the C interface.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "tse/tse.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSeed = 3;
constexpr int kExitTransport = 4;
constexpr int kExitInternal = 5;

int ExitCodeFor(tse_status status) {
  switch (status) {
    case TSE_OK:
      return kExitOk;
    case TSE_ERR_MISSING_SEED:
    case TSE_ERR_OOV_SEED:
      return kExitSeed;
    case TSE_ERR_TRANSPORT:
      return kExitTransport;
    case TSE_ERR_VALIDATION:
    case TSE_ERR_IO:
    case TSE_ERR_EMPTY_CORPUS:
    case TSE_ERR_TRUNCATION:
    case TSE_ERR_CAPABILITY:
    case TSE_ERR_INVALID_WORLD:
    case TSE_ERR_CORRUPT_TABLE:
      return kExitValidation;
    default:
      return kExitInternal;
  }
}

// A failed library call or a usage problem, carried up to main.
struct Failure {
  int exit_code;
  std::string message;
};

void Check(tse_status status) {
  if (status != TSE_OK) {
    throw Failure{ExitCodeFor(status),
                  std::string(tse_status_name(status)) + ": " + tse_last_error()};
  }
}

[[noreturn]] void Usage(const std::string& message) { throw Failure{kExitValidation, message}; }

std::string TakeString(char* s) {
  std::string out = s ? s : "";
  tse_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using CorpusPtr = std::unique_ptr<tse_corpus, Deleter<tse_corpus, tse_corpus_free>>;
using BackendPtr = std::unique_ptr<tse_backend, Deleter<tse_backend, tse_backend_free>>;
using EmbeddingsPtr =
    std::unique_ptr<tse_embeddings, Deleter<tse_embeddings, tse_embeddings_free>>;
using GoldPtr = std::unique_ptr<tse_gold, Deleter<tse_gold, tse_gold_free>>;
using PatternsPtr = std::unique_ptr<tse_patterns, Deleter<tse_patterns, tse_patterns_free>>;
using ExpansionPtr =
    std::unique_ptr<tse_expansion, Deleter<tse_expansion, tse_expansion_free>>;

// ---------------------------------------------------------------------------
// Configuration keys

enum class Kind { kString, kCount, kOptCount, kReal, kCountList, kStringList };

struct Key {
  const char* name;
  const char* flag;
  Kind kind;
  bool method;  // passed to the library as part of the method configuration
  const char* help;
};

const Key kKeys[] = {
    {"corpus", "--corpus", Kind::kString, false, "raw corpus, one sentence per line"},
    {"index", "--index", Kind::kString, false, "saved corpus index"},
    {"mock_world", "--mock-world", Kind::kString, false, "mock LM world (JSON)"},
    {"backend", "--backend", Kind::kString, false, "LM service base URL"},
    {"embeddings", "--embeddings", Kind::kString, false, "embedding table"},
    {"candidates_file", "--candidates-file", Kind::kString, false,
     "MPB2 candidate terms, one per line"},
    {"oracle_gold", "--oracle-gold", Kind::kString, false, "gold set for mpb2o"},
    {"patterns_file", "--patterns-file", Kind::kString, false,
     "expand from previously mined patterns"},
    {"seeds", "--seeds", Kind::kStringList, false, "comma-separated seed terms"},
    {"set", "--set", Kind::kString, false, "gold set file"},
    {"subset", "--subset", Kind::kString, false, "gold subset file"},
    {"superset", "--superset", Kind::kString, false, "gold superset file"},
    {"method", "--method", Kind::kString, true, "mpb1 | bb | mpb2 | mpb2o | s2v"},
    {"sentences", "--sentences", Kind::kCount, true, "total sentence budget over seeds"},
    {"patterns", "--patterns", Kind::kCount, true, "indicative patterns kept"},
    {"diversity", "--diversity", Kind::kReal, true, "minimum differing-token fraction"},
    {"max_rank_cap", "--max-rank-cap", Kind::kOptCount, true, "drop patterns above this"},
    {"q", "--q", Kind::kCount, true, "top-q size of the pattern similarity"},
    {"max_occ", "--max-occ", Kind::kCount, true, "occurrences scored per candidate"},
    {"candidates", "--candidates", Kind::kCount, true, "embedding neighbours as candidates"},
    {"freq_cap", "--freq-cap", Kind::kOptCount, true, "neighbour search frequency cap"},
    {"top_n", "--top-n", Kind::kOptCount, true, "expansion length"},
    {"fallback_top_q", "--fallback-top-q", Kind::kOptCount, true,
     "top_q used when full distributions are unavailable"},
    {"trials", "--trials", Kind::kCount, true, "seed sets per experiment"},
    {"seed_size", "--seed-size", Kind::kCount, true, "seeds per trial"},
    {"rng", "--rng", Kind::kCount, true, "seed of the trial sampler"},
    {"sent_counts", "--sent-counts", Kind::kCountList, true, "grid sentence budgets"},
    {"patt_counts", "--patt-counts", Kind::kCountList, true, "grid pattern counts"},
    {"q_values", "--q-values", Kind::kCountList, true, "q values to sweep"},
};

const Key* FindKey(const std::string& name) {
  for (const auto& k : kKeys) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> SplitComma(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::optional<unsigned long long> ParseCount(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Converts a textual value for `key`; records a problem instead of throwing.
json ParseValue(const Key& key, const std::string& raw, std::vector<std::string>& problems) {
  const std::string v = Trim(raw);
  auto bad = [&](const char* what) {
    problems.push_back(std::string(key.name) + ": '" + v + "' is not " + what);
    return json();
  };
  switch (key.kind) {
    case Kind::kString:
      return v;
    case Kind::kStringList:
      return SplitComma(v);
    case Kind::kCount:
      if (auto n = ParseCount(v)) return *n;
      return bad("a non-negative integer");
    case Kind::kOptCount:
      if (v == "none" || v == "null") return json();
      if (auto n = ParseCount(v)) return *n;
      return bad("a non-negative integer or 'none'");
    case Kind::kReal: {
      try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used == v.size()) return d;
      } catch (const std::exception&) {
      }
      return bad("a number");
    }
    case Kind::kCountList: {
      json list = json::array();
      for (const auto& item : SplitComma(v)) {
        if (auto n = ParseCount(item)) {
          list.push_back(*n);
        } else {
          return bad("a comma-separated list of integers");
        }
      }
      return list;
    }
  }
  return json();
}

// Reads --config: either "key = value" lines or an artifact written by this
// tool, whose embedded configuration is reused.
json ReadConfigFile(const std::string& path, std::vector<std::string>& problems) {
  std::ifstream in(path);
  if (!in) Usage("cannot open config file " + path);
  std::string first;
  std::getline(in, first);
  if (!Trim(first).empty() && Trim(first)[0] == '{') {
    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json doc = json::parse(first, nullptr, false);
    if (doc.is_discarded()) doc = json::parse(first + "\n" + rest, nullptr, false);
    if (!doc.is_discarded()) {
      if (doc.contains("meta") && doc["meta"].contains("config")) return doc["meta"]["config"];
      if (doc.contains("config")) return doc["config"];
    }
    Usage(path + ": JSON file without an embedded config");
  }
  json config = json::object();
  std::size_t line_no = 0;
  std::string line = first;
  do {
    ++line_no;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      problems.push_back(path + ":" + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    const std::string name = Trim(t.substr(0, eq));
    const Key* key = FindKey(name);
    if (key == nullptr) {
      problems.push_back(path + ":" + std::to_string(line_no) + ": unknown key '" + name + "'");
      continue;
    }
    config[name] = ParseValue(*key, t.substr(eq + 1), problems);
  } while (std::getline(in, line));
  return config;
}

// ---------------------------------------------------------------------------
// Shared options

struct Common {
  std::string config_path;
  std::string out_dir = ".";
  int workers = 1;
  std::string cache_dir;
  std::string log_level = "info";
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

void AddCommon(CLI::App* sub, Common& c, const std::vector<std::string>& keys) {
  sub->add_option("--config", c.config_path,
                  "key = value file, or an artifact whose embedded config is reused");
  sub->add_option("--out", c.out_dir, "artifact directory")->capture_default_str();
  sub->add_option("--workers", c.workers, "worker threads")->capture_default_str();
  sub->add_option("--cache-dir", c.cache_dir, "persistent completion cache directory");
  sub->add_option("--log-level", c.log_level, "debug, info, warn, error or off")
      ->capture_default_str();
  for (const auto& name : keys) {
    const Key* key = FindKey(name);
    c.options[name] = sub->add_option(key->flag, c.values[name], key->help);
  }
}

// Defaults < config file < flags; every problem is reported at once.
json Resolve(const Common& c, bool method_config = true) {
  std::vector<std::string> problems;
  json config = json::object();
  if (!c.config_path.empty()) config = ReadConfigFile(c.config_path, problems);
  for (const auto& [name, option] : c.options) {
    if (option->count() > 0) config[name] = ParseValue(*FindKey(name), c.values.at(name), problems);
  }
  if (c.workers < 1) problems.push_back("workers must be >= 1");
  json method = json::object();
  for (const auto& [name, value] : config.items()) {
    const Key* key = FindKey(name);
    if (key == nullptr) {
      problems.push_back("unknown key '" + name + "'");
    } else if (key->method) {
      method[name] = value;
    }
  }
  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  " + p;
    Usage(msg);
  }
  if (!method_config) return config;
  char* resolved = nullptr;
  Check(tse_config_resolve(method.dump().c_str(), &resolved));
  const json filled = json::parse(TakeString(resolved));
  for (const auto& [name, value] : filled.items()) config[name] = value;
  return config;
}

std::string Str(const json& config, const char* key) {
  return config.contains(key) && config[key].is_string() ? config[key].get<std::string>() : "";
}

// Method keys plus the runtime worker count, for library calls.
std::string LibraryConfig(const json& config, int workers) {
  json out = json::object();
  for (const auto& [name, value] : config.items()) {
    const Key* key = FindKey(name);
    if (key != nullptr && key->method) out[name] = value;
  }
  out["workers"] = workers;
  return out.dump();
}

// ---------------------------------------------------------------------------
// Inputs

struct Inputs {
  CorpusPtr corpus;
  BackendPtr backend;
  EmbeddingsPtr embeddings;
  std::vector<std::string> candidates;
  std::vector<const char*> candidate_ptrs;

  tse_resources View() {
    candidate_ptrs.clear();
    for (const auto& c : candidates) candidate_ptrs.push_back(c.c_str());
    return tse_resources{corpus.get(), backend.get(), embeddings.get(),
                         candidate_ptrs.empty() ? nullptr : candidate_ptrs.data(),
                         candidate_ptrs.size()};
  }
};

bool NeedsLm(const std::string& method) { return method != "s2v"; }

CorpusPtr OpenCorpus(const json& config) {
  const std::string index = Str(config, "index");
  const std::string corpus = Str(config, "corpus");
  if (!index.empty() && !corpus.empty()) Usage("give either corpus or index, not both");
  tse_corpus* c = nullptr;
  if (!index.empty()) {
    Check(tse_corpus_load(index.c_str(), &c));
  } else if (!corpus.empty()) {
    Check(tse_corpus_build_file(corpus.c_str(), 1, &c));
  } else {
    Usage("a corpus is required (--corpus or --index)");
  }
  return CorpusPtr(c);
}

BackendPtr OpenBackend(const json& config, const Common& c) {
  const std::string world = Str(config, "mock_world");
  const std::string url = Str(config, "backend");
  if (!world.empty() && !url.empty()) Usage("give either mock_world or backend, not both");
  tse_backend* b = nullptr;
  if (!world.empty()) {
    Check(tse_backend_mock_file(world.c_str(), &b));
  } else if (!url.empty()) {
    Check(tse_backend_http(url.c_str(), 0, 0, &b));
  } else {
    Usage("an LM backend is required (--mock-world or --backend)");
  }
  BackendPtr backend(b);
  if (c.cache_dir.empty()) return backend;
  std::error_code ec;
  fs::create_directories(c.cache_dir, ec);
  if (ec) Usage("cannot create cache directory " + c.cache_dir + ": " + ec.message());
  const std::string file = (fs::path(c.cache_dir) / "completions.jsonl").string();
  tse_backend* cached = nullptr;
  Check(tse_backend_cached(backend.get(), file.c_str(), &cached));
  return BackendPtr(cached);
}

Inputs OpenInputs(const json& config, const Common& c) {
  Inputs in;
  const std::string method = Str(config, "method");
  if (NeedsLm(method)) {
    in.corpus = OpenCorpus(config);
    in.backend = OpenBackend(config, c);
  }
  const std::string emb = Str(config, "embeddings");
  if (!emb.empty()) {
    tse_embeddings* e = nullptr;
    Check(tse_embeddings_load(emb.c_str(), &e));
    in.embeddings.reset(e);
  }
  const std::string cand = Str(config, "candidates_file");
  if (!cand.empty()) {
    std::ifstream f(cand);
    if (!f) Usage("cannot open candidates file " + cand);
    std::string line;
    while (std::getline(f, line)) {
      line = Trim(line);
      if (!line.empty() && line[0] != '#') in.candidates.push_back(line);
    }
  }
  return in;
}

GoldPtr OpenGold(const json& config, const char* key, const char* what) {
  const std::string path = Str(config, key);
  if (path.empty()) Usage(std::string(what) + " is required (--" + key + ")");
  tse_gold* g = nullptr;
  Check(tse_gold_load(path.c_str(), &g));
  return GoldPtr(g);
}

std::vector<std::string> Seeds(const json& config) {
  if (!config.contains("seeds") || config["seeds"].empty()) {
    Usage("seed terms are required (--seeds a,b,c)");
  }
  return config["seeds"].get<std::vector<std::string>>();
}

fs::path OutDir(const Common& c) {
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec) Usage("cannot create output directory " + c.out_dir + ": " + ec.message());
  return fs::path(c.out_dir);
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out.flush()) throw Failure{kExitValidation, "cannot write " + path.string()};
}

// ---------------------------------------------------------------------------
// Subcommands

void RunIndex(const Common& c) {
  const json config = Resolve(c, false);
  auto corpus = OpenCorpus(config);
  const fs::path dir = OutDir(c);
  Check(tse_corpus_save(corpus.get(), (dir / "corpus.idx").string().c_str()));
  std::size_t sentences = 0, tokens = 0, types = 0;
  Check(tse_corpus_stats(corpus.get(), &sentences, &tokens, &types));
  const json meta{{"config", config},
                  {"sentences", sentences},
                  {"tokens", tokens},
                  {"types", types}};
  WriteText(dir / "index.json", meta.dump(2) + "\n");
  std::cerr << "indexed " << sentences << " sentences, " << tokens << " tokens, " << types
            << " types\n";
}

void RunMine(const Common& c) {
  const json config = Resolve(c);
  auto in = OpenInputs(config, c);
  if (!in.corpus) {
    in.corpus = OpenCorpus(config);
    in.backend = OpenBackend(config, c);
  }
  const auto seeds = Seeds(config);
  std::vector<const char*> seed_ptrs;
  for (const auto& s : seeds) seed_ptrs.push_back(s.c_str());
  const auto view = in.View();
  tse_patterns* p = nullptr;
  Check(tse_mine(&view, LibraryConfig(config, c.workers).c_str(), seed_ptrs.data(),
                 seed_ptrs.size(), &p));
  PatternsPtr patterns(p);
  const fs::path dir = OutDir(c);
  Check(tse_patterns_write(patterns.get(), (dir / "patterns.jsonl").string().c_str(),
                           config.dump().c_str()));
  std::cerr << "mined " << tse_patterns_size(patterns.get()) << " patterns\n";
}

void RunExpand(const Common& c) {
  const json config = Resolve(c);
  auto in = OpenInputs(config, c);
  GoldPtr oracle;
  if (!Str(config, "oracle_gold").empty()) oracle = OpenGold(config, "oracle_gold", "");
  const auto view = in.View();
  const std::string lib = LibraryConfig(config, c.workers);
  const fs::path dir = OutDir(c);
  tse_expansion* e = nullptr;
  const std::string patterns_file = Str(config, "patterns_file");
  if (!patterns_file.empty()) {
    tse_patterns* p = nullptr;
    Check(tse_patterns_read(patterns_file.c_str(), &p));
    PatternsPtr patterns(p);
    Check(tse_expand_with_patterns(&view, lib.c_str(), patterns.get(), oracle.get(), 0, &e));
  } else {
    const auto seeds = Seeds(config);
    std::vector<const char*> seed_ptrs;
    for (const auto& s : seeds) seed_ptrs.push_back(s.c_str());
    tse_patterns* p = nullptr;
    Check(tse_expand(&view, lib.c_str(), seed_ptrs.data(), seed_ptrs.size(), oracle.get(), 0,
                     &e, &p));
    PatternsPtr patterns(p);
    if (patterns) {
      Check(tse_patterns_write(patterns.get(), (dir / "patterns.jsonl").string().c_str(),
                               config.dump().c_str()));
    }
  }
  ExpansionPtr expansion(e);
  Check(tse_expansion_write(expansion.get(), (dir / "expansion.jsonl").string().c_str(),
                            config.dump().c_str()));
  const std::size_t n = tse_expansion_size(expansion.get());
  for (std::size_t i = 0; i < n && i < 20; ++i) {
    std::printf("%3zu  %-30s %.6f\n", i + 1, tse_expansion_term(expansion.get(), i),
                tse_expansion_score(expansion.get(), i));
  }
  if (n > 20) std::printf("... %zu terms in %s\n", n, (dir / "expansion.jsonl").c_str());
}

using Experiment = tse_status (*)(const tse_resources*, const char*, const tse_gold*, char**);

void WriteReport(const Common& c, const json& config, const std::string& report_json,
                 const std::string& stem) {
  json report = json::parse(report_json);
  report["config"] = config;
  const fs::path dir = OutDir(c);
  WriteText(dir / (stem + ".json"), report.dump(2) + "\n");
  char* text = nullptr;
  Check(tse_report_render(report_json.c_str(), &text));
  const std::string rendered = TakeString(text);
  WriteText(dir / (stem + ".txt"), rendered);
  std::cout << rendered;
}

void RunExperiment(const Common& c, Experiment fn, const std::string& stem) {
  const json config = Resolve(c);
  auto in = OpenInputs(config, c);
  auto gold = OpenGold(config, "set", "a gold set");
  const auto view = in.View();
  char* report = nullptr;
  Check(fn(&view, LibraryConfig(config, c.workers).c_str(), gold.get(), &report));
  WriteReport(c, config, TakeString(report), stem);
}

void RunSubset(const Common& c) {
  const json config = Resolve(c);
  auto in = OpenInputs(config, c);
  auto subset = OpenGold(config, "subset", "a subset gold set");
  auto superset = OpenGold(config, "superset", "a superset gold set");
  const auto view = in.View();
  char* report = nullptr;
  Check(tse_subset(&view, LibraryConfig(config, c.workers).c_str(), subset.get(),
                   superset.get(), &report));
  WriteReport(c, config, TakeString(report), "subset");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Term set expansion with masked-LM patterns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tse_version()));

  const std::vector<std::string> corpus_keys = {"corpus", "index"};
  const std::vector<std::string> lm_keys = {"corpus", "index", "mock_world", "backend"};
  std::vector<std::string> method_keys = {
      "corpus",     "index",       "mock_world", "backend", "embeddings", "candidates_file",
      "method",     "sentences",   "patterns",   "diversity", "max_rank_cap", "q",
      "max_occ",    "candidates",  "freq_cap",   "top_n",   "fallback_top_q"};
  auto with = [](std::vector<std::string> base, std::initializer_list<const char*> extra) {
    for (const char* e : extra) base.emplace_back(e);
    return base;
  };
  const auto eval_keys = with(method_keys, {"set", "trials", "seed_size", "rng"});

  struct Sub {
    const char* name;
    const char* help;
    std::vector<std::string> keys;
  };
  const std::vector<Sub> subs = {
      {"index", "build and save a corpus index", corpus_keys},
      {"mine", "mine indicative patterns for a seed set",
       with(lm_keys, {"seeds", "method", "sentences", "patterns", "diversity",
                      "max_rank_cap"})},
      {"expand", "expand a seed set",
       with(method_keys, {"seeds", "oracle_gold", "patterns_file"})},
      {"evaluate", "MAP over random seed sets of a gold set", eval_keys},
      {"grid", "MAP over sentence and pattern budgets", with(eval_keys, {"sent_counts",
                                                                          "patt_counts"})},
      {"sweep-q", "MAP as a function of the similarity's q", with(eval_keys, {"q_values"})},
      {"subset", "seeds from a subset, scored against subset and superset",
       with(method_keys, {"subset", "superset", "trials", "seed_size", "rng"})},
  };
  std::map<std::string, Common> commons;
  std::map<std::string, CLI::App*> apps;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    AddCommon(sub, commons[s.name], s.keys);
    apps[s.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    for (const auto& [name, sub] : apps) {
      if (!sub->parsed()) continue;
      Common& c = commons[name];
      Check(tse_set_log_level(c.log_level.c_str()));
      if (name == "index") RunIndex(c);
      if (name == "mine") RunMine(c);
      if (name == "expand") RunExpand(c);
      if (name == "evaluate") RunExperiment(c, tse_evaluate, "evaluate");
      if (name == "grid") RunExperiment(c, tse_grid, "grid");
      if (name == "sweep-q") RunExperiment(c, tse_sweep_q, "sweep_q");
      if (name == "subset") RunSubset(c);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
