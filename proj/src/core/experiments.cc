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

#include "tse/experiments.h"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>

#include "tse/cache.h"
#include "tse/error.h"
#include "tse/log.h"
#include "tse/mpb1.h"

namespace tse {
namespace {

constexpr std::string_view kMethodNames[] = {"mpb1", "bb", "mpb2", "mpb2o", "s2v"};

bool UsesLm(Method m) { return m != Method::kS2v; }
bool IsSimilarityMethod(Method m) {
  return m == Method::kMpb2 || m == Method::kMpb2Oracle;
}

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t Bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

// Shares one in-memory completion cache across the runs of an experiment.
struct CachedResources {
  std::shared_ptr<const CachingBackend> cache;
  Resources resources;

  explicit CachedResources(const Resources& base) : resources(base) {
    if (base.backend != nullptr) {
      std::shared_ptr<const MlmBackend> view(base.backend, [](const MlmBackend*) {});
      cache = std::make_shared<const CachingBackend>(view);
      resources.backend = cache.get();
    }
  }
};

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string JoinComma(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (const double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::vector<std::vector<std::string>> SampleAll(const Resources& resources,
                                                const MethodConfig& config,
                                                const GoldSet& gold,
                                                const EvalOptions& options) {
  std::vector<std::vector<std::string>> seeds;
  for (std::size_t t = 0; t < options.trials; ++t) {
    seeds.push_back(SampleSeeds(gold, options.seed_size, options.rng_seed, t,
                                [&](const std::string& term) {
                                  return SeedUsable(resources, config, term);
                                })
                        .seeds);
  }
  return seeds;
}

}  // namespace

std::string_view MethodName(Method method) {
  return kMethodNames[static_cast<int>(method)];
}

Method ParseMethod(std::string_view name) {
  for (int i = 0; i < 5; ++i) {
    if (kMethodNames[i] == name) return static_cast<Method>(i);
  }
  throw Error(ErrorCode::kValidation, "unknown method '" + std::string(name) +
                                          "' (allowed: mpb1, bb, mpb2, mpb2o, s2v)");
}

MethodConfig MethodConfig::Defaults(Method method) {
  MethodConfig config;
  config.method = method;
  config.patterns = IsSimilarityMethod(method) ? 20 : 160;
  return config;
}

MethodConfig MethodConfig::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kValidation, "configuration must be an object");
  MethodConfig config =
      Defaults(j.contains("method") && j["method"].is_string()
                   ? ParseMethod(j["method"].get<std::string>())
                   : Method::kMpb1);
  std::vector<std::string> problems;
  if (j.contains("method") && !j["method"].is_string()) {
    problems.push_back("method must be a string");
  }
  auto count = [&](const char* key, std::size_t& field) {
    if (!j.contains(key)) return;
    const auto& v = j[key];
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      field = v.get<std::size_t>();
    } else {
      problems.push_back(std::string(key) + " must be a non-negative integer");
    }
  };
  auto optional_count = [&](const char* key, std::optional<std::size_t>& field) {
    if (!j.contains(key)) return;
    if (j[key].is_null()) {
      field.reset();
      return;
    }
    std::size_t v = 0;
    const std::size_t before = problems.size();
    count(key, v);
    if (problems.size() == before) field = v;
  };
  count("sentences", config.sentence_budget);
  count("patterns", config.patterns);
  if (j.contains("diversity")) {
    if (j["diversity"].is_number()) {
      config.diversity_fraction = j["diversity"].get<double>();
    } else {
      problems.push_back("diversity must be a number");
    }
  }
  optional_count("max_rank_cap", config.max_rank_cap);
  count("q", config.similarity.q);
  count("max_occ", config.similarity.max_occurrences);
  count("candidates", config.candidates);
  optional_count("freq_cap", config.freq_cap);
  optional_count("top_n", config.top_n);
  optional_count("fallback_top_q", config.fallback_top_q);
  if (j.contains("workers")) {
    if (j["workers"].is_number_integer()) {
      config.workers = j["workers"].get<int>();
    } else {
      problems.push_back("workers must be an integer");
    }
  }
  try {
    config.Validate();
  } catch (const Error& e) {
    if (problems.empty()) throw;
    std::string detail = e.what();
    const auto nl = detail.find('\n');
    if (nl != std::string::npos) {
      std::istringstream lines(detail.substr(nl + 1));
      std::string line;
      while (std::getline(lines, line)) problems.push_back(line.substr(2));
    }
  }
  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(ErrorCode::kValidation, msg);
  }
  return config;
}

MiningConfig MethodConfig::Mining(std::size_t seed_count) const {
  MiningConfig mining;
  const std::size_t k = std::max<std::size_t>(1, seed_count);
  // Even split of the budget, raised just enough to make room for ℓ
  // candidates.
  mining.sentences_per_seed =
      std::max<std::size_t>({1, sentence_budget / k, (patterns + k - 1) / k});
  mining.patterns = patterns;
  mining.diversity_fraction = diversity_fraction;
  mining.max_rank_cap = max_rank_cap;
  mining.workers = workers;
  return mining;
}

void MethodConfig::Validate() const {
  std::vector<std::string> problems;
  if (sentence_budget == 0) problems.push_back("sentences must be >= 1");
  if (patterns == 0) problems.push_back("patterns must be >= 1");
  if (patterns > sentence_budget) {
    problems.push_back("patterns (" + std::to_string(patterns) +
                       ") cannot exceed sentences (" + std::to_string(sentence_budget) + ")");
  }
  if (!(diversity_fraction > 0.0 && diversity_fraction <= 1.0)) {
    problems.push_back("diversity must be in (0, 1]");
  }
  if (max_rank_cap && *max_rank_cap == 0) problems.push_back("max-rank-cap must be >= 1");
  if (similarity.q == 0) problems.push_back("q must be >= 1");
  if (similarity.max_occurrences == 0) problems.push_back("max-occ must be >= 1");
  if (candidates == 0) problems.push_back("candidates must be >= 1");
  if (freq_cap && *freq_cap == 0) problems.push_back("freq-cap must be >= 1");
  if (top_n && *top_n == 0) problems.push_back("top-n must be >= 1");
  if (fallback_top_q && *fallback_top_q == 0) problems.push_back("fallback-top-q must be >= 1");
  if (workers < 1) problems.push_back("workers must be >= 1");
  if (problems.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw Error(ErrorCode::kValidation, msg);
}

nlohmann::json MethodConfig::ToJson() const {
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json();
  };
  return nlohmann::json{{"method", MethodName(method)},
                        {"sentences", sentence_budget},
                        {"patterns", patterns},
                        {"diversity", diversity_fraction},
                        {"max_rank_cap", opt(max_rank_cap)},
                        {"q", similarity.q},
                        {"max_occ", similarity.max_occurrences},
                        {"candidates", candidates},
                        {"freq_cap", opt(freq_cap)},
                        {"top_n", opt(top_n)},
                        {"fallback_top_q", opt(fallback_top_q)}};
}

void CheckResources(const Resources& resources, const MethodConfig& config,
                    bool have_oracle) {
  std::vector<std::string> missing;
  const Method m = config.method;
  if (UsesLm(m)) {
    if (resources.corpus == nullptr) missing.push_back("a corpus or index");
    if (resources.backend == nullptr) missing.push_back("an LM backend");
  }
  if (m == Method::kS2v && resources.embeddings == nullptr) {
    missing.push_back("an embedding table");
  }
  if (m == Method::kMpb2 && resources.embeddings == nullptr &&
      resources.candidates.empty()) {
    missing.push_back("candidates (embedding table or candidate list)");
  }
  if (m == Method::kMpb2Oracle && !have_oracle) missing.push_back("an oracle gold set");
  if (missing.empty()) return;
  std::string msg = "method " + std::string(MethodName(m)) + " requires:";
  for (const auto& p : missing) msg += "\n  " + p;
  throw Error(ErrorCode::kValidation, msg);
}

bool SeedUsable(const Resources& resources, const MethodConfig& config,
                std::string_view term) {
  const Method m = config.method;
  if (UsesLm(m)) {
    if (resources.corpus->FindOccurrences(term, 1).empty()) return false;
    if (!resources.backend->Contains(NormalizeTerm(term, resources.corpus->config()))) {
      return false;
    }
  }
  const bool needs_embedding =
      m == Method::kS2v || (m == Method::kMpb2 && resources.candidates.empty());
  if (needs_embedding && !resources.embeddings->Find(term)) return false;
  return true;
}

std::size_t DefaultTopN(const GoldSet& gold) { return gold.size() > 100 ? 350 : 200; }

std::optional<std::size_t> DefaultCutoff(const GoldSet& gold) {
  if (gold.open()) return kOpenSetCutoff;
  return std::nullopt;
}

MethodOutput RunMethod(const Resources& resources, const MethodConfig& config,
                       const SeedSet& seeds, std::size_t top_n, const GoldSet* oracle) {
  config.Validate();
  CheckResources(resources, config, oracle != nullptr);
  MethodOutput out;
  const MiningConfig mining = config.Mining(seeds.size());
  switch (config.method) {
    case Method::kMpb1: {
      auto patterns =
          MineIndicativePatterns(*resources.corpus, *resources.backend, seeds, mining);
      out.expansion = ScoreVocabTerms(*resources.backend, patterns,
                                      {top_n, config.fallback_top_q, config.workers});
      out.patterns = std::move(patterns);
      break;
    }
    case Method::kBb: {
      out.expansion = ExpandBaseline(*resources.backend, *resources.corpus, seeds, mining,
                                     {top_n, config.fallback_top_q, config.workers});
      out.patterns = BaselinePatternSet(*resources.corpus, seeds,
                                        mining.sentences_per_seed, mining.patterns);
      break;
    }
    case Method::kMpb2:
    case Method::kMpb2Oracle: {
      auto patterns =
          MineIndicativePatterns(*resources.corpus, *resources.backend, seeds, mining);
      std::vector<std::string> candidates = resources.candidates;
      if (resources.embeddings != nullptr) {
        const auto s2v = ExpandS2v(*resources.embeddings, seeds, config.candidates,
                                   config.freq_cap, config.workers);
        for (const auto& e : s2v.entries) candidates.push_back(e.term);
      }
      if (config.method == Method::kMpb2Oracle) {
        for (auto& form : oracle->AllForms()) candidates.push_back(std::move(form));
      }
      Mpb2Options options;
      options.similarity = config.similarity;
      options.top_n = top_n;
      options.workers = config.workers;
      out.expansion = ExpandMpb2(*resources.backend, *resources.corpus, patterns,
                                 candidates, options);
      out.expansion.method = std::string(MethodName(config.method));
      out.patterns = std::move(patterns);
      break;
    }
    case Method::kS2v:
      out.expansion = ExpandS2v(*resources.embeddings, seeds, top_n, config.freq_cap,
                                config.workers);
      break;
  }
  return out;
}

SeedSample SampleSeeds(const GoldSet& gold, std::size_t seed_size,
                       std::uint64_t rng_seed, std::size_t trial,
                       const std::function<bool(const std::string&)>& usable) {
  if (seed_size == 0) throw Error(ErrorCode::kValidation, "seed size must be >= 1");
  if (gold.size() < seed_size) {
    throw Error(ErrorCode::kMissingSeed,
                "gold set '" + gold.name() + "' has " + std::to_string(gold.size()) +
                    " groups; cannot draw " + std::to_string(seed_size) + " seeds");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(rng_seed),
                    static_cast<std::uint32_t>(rng_seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(trial) >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<std::size_t> order(gold.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  SeedSample sample;
  // Lazy Fisher-Yates: position i is fixed only when it is needed.
  for (std::size_t i = 0; i < order.size() && sample.seeds.size() < seed_size; ++i) {
    const std::size_t j = i + Bounded(rng, order.size() - i);
    std::swap(order[i], order[j]);
    const std::string& form = gold.surface(order[i]).front();
    if (usable && !usable(form)) {
      Log().info("trial {}: rejected seed '{}' (fails method preconditions)", trial, form);
      sample.rejected.push_back(form);
      continue;
    }
    sample.seeds.push_back(form);
  }
  if (sample.seeds.size() < seed_size) {
    throw Error(ErrorCode::kMissingSeed,
                "gold set '" + gold.name() + "' has fewer than " +
                    std::to_string(seed_size) + " usable seed terms");
  }
  return sample;
}

TrialResult RunTrial(const Resources& resources, const MethodConfig& config,
                     const GoldSet& gold, const EvalOptions& options, std::size_t trial) {
  CheckResources(resources, config, true);
  TrialResult result;
  result.trial = trial;
  auto sample = SampleSeeds(gold, options.seed_size, options.rng_seed, trial,
                            [&](const std::string& term) {
                              return SeedUsable(resources, config, term);
                            });
  result.seeds = std::move(sample.seeds);
  result.rejected = std::move(sample.rejected);
  const std::size_t top_n = config.top_n.value_or(DefaultTopN(gold));
  try {
    const auto out = RunMethod(resources, config, SeedSet(result.seeds), top_n, &gold);
    result.ap = AveragePrecision(out.expansion, gold, DefaultCutoff(gold));
  } catch (const Error& e) {
    throw Error(e.code(), "trial " + std::to_string(trial) + " (seeds: " +
                              JoinComma(result.seeds) + "): " + e.what());
  }
  return result;
}

EvalReport Evaluate(const Resources& resources, const MethodConfig& config,
                    const GoldSet& gold, const EvalOptions& options) {
  config.Validate();
  if (options.trials == 0) throw Error(ErrorCode::kValidation, "trials must be >= 1");
  CachedResources cached(resources);
  EvalReport report;
  report.gold = gold.name();
  report.method = std::string(MethodName(config.method));
  report.cutoff = DefaultCutoff(gold);
  report.top_n = config.top_n.value_or(DefaultTopN(gold));
  std::vector<double> aps;
  for (std::size_t t = 0; t < options.trials; ++t) {
    report.trials.push_back(RunTrial(cached.resources, config, gold, options, t));
    aps.push_back(report.trials.back().ap);
  }
  report.map = Mean(aps);
  return report;
}

GridReport GridExperiment(const Resources& resources, const MethodConfig& config,
                          const GoldSet& gold, const std::vector<std::size_t>& sent_counts,
                          const std::vector<std::size_t>& patt_counts,
                          const EvalOptions& options) {
  if (sent_counts.empty() || patt_counts.empty()) {
    throw Error(ErrorCode::kValidation, "grid needs sentence and pattern counts");
  }
  if (options.trials == 0) throw Error(ErrorCode::kValidation, "trials must be >= 1");
  CheckResources(resources, config, true);
  CachedResources cached(resources);
  GridReport report;
  report.gold = gold.name();
  report.sent_counts = sent_counts;
  report.patt_counts = patt_counts;
  report.seeds = SampleAll(cached.resources, config, gold, options);
  const std::size_t top_n = config.top_n.value_or(DefaultTopN(gold));
  for (const std::size_t patt : patt_counts) {
    std::vector<std::optional<double>> row;
    for (const std::size_t sent : sent_counts) {
      if (patt > sent) {
        row.push_back(std::nullopt);
        continue;
      }
      MethodConfig cell = config;
      cell.sentence_budget = sent;
      cell.patterns = patt;
      std::vector<double> aps;
      for (const auto& seeds : report.seeds) {
        const auto out = RunMethod(cached.resources, cell, SeedSet(seeds), top_n, &gold);
        aps.push_back(AveragePrecision(out.expansion, gold, DefaultCutoff(gold)));
      }
      row.push_back(Mean(aps));
    }
    report.cells.push_back(std::move(row));
  }
  return report;
}

SweepReport QSweep(const Resources& resources, const MethodConfig& config,
                   const GoldSet& gold, const std::vector<std::size_t>& q_values,
                   const EvalOptions& options) {
  if (!IsSimilarityMethod(config.method)) {
    throw Error(ErrorCode::kValidation, "the q sweep applies to mpb2 and mpb2o only");
  }
  if (q_values.empty()) throw Error(ErrorCode::kValidation, "no q values given");
  if (options.trials == 0) throw Error(ErrorCode::kValidation, "trials must be >= 1");
  CheckResources(resources, config, true);
  CachedResources cached(resources);
  SweepReport report;
  report.gold = gold.name();
  report.method = std::string(MethodName(config.method));
  report.q_values = q_values;
  report.seeds = SampleAll(cached.resources, config, gold, options);
  const std::size_t top_n = config.top_n.value_or(DefaultTopN(gold));
  for (const std::size_t q : q_values) {
    MethodConfig cell = config;
    cell.similarity.q = q;
    std::vector<double> aps;
    for (const auto& seeds : report.seeds) {
      const auto out = RunMethod(cached.resources, cell, SeedSet(seeds), top_n, &gold);
      aps.push_back(AveragePrecision(out.expansion, gold, DefaultCutoff(gold)));
    }
    report.map.push_back(Mean(aps));
  }
  return report;
}

SubsetReport SubsetExperiment(const Resources& resources, const MethodConfig& config,
                              const GoldSet& subset, const GoldSet& superset,
                              const EvalOptions& options) {
  for (const auto& form : subset.AllForms()) {
    if (!superset.GroupOf(form)) {
      throw Error(ErrorCode::kValidation, "subset member '" + form +
                                              "' is not in superset '" +
                                              superset.name() + "'");
    }
  }
  if (options.trials == 0) throw Error(ErrorCode::kValidation, "trials must be >= 1");
  CheckResources(resources, config, true);
  CachedResources cached(resources);
  SubsetReport report;
  report.subset = subset.name();
  report.superset = superset.name();
  report.method = std::string(MethodName(config.method));
  report.seeds = SampleAll(cached.resources, config, subset, options);
  const std::size_t top_n = config.top_n.value_or(DefaultTopN(superset));
  for (const auto& seeds : report.seeds) {
    const auto out = RunMethod(cached.resources, config, SeedSet(seeds), top_n, &superset);
    report.subset_ap.push_back(AveragePrecision(out.expansion, subset, DefaultCutoff(subset)));
    report.superset_ap.push_back(
        AveragePrecision(out.expansion, superset, DefaultCutoff(superset)));
  }
  report.subset_map = Mean(report.subset_ap);
  report.superset_map = Mean(report.superset_ap);
  return report;
}

nlohmann::json EvalReport::ToJson() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& trial : trials) {
    t.push_back({{"trial", trial.trial},
                 {"seeds", trial.seeds},
                 {"rejected_seeds", trial.rejected},
                 {"ap", trial.ap}});
  }
  return {{"kind", "evaluate"},
          {"gold", gold},
          {"method", method},
          {"cutoff", cutoff ? nlohmann::json(*cutoff) : nlohmann::json()},
          {"top_n", top_n},
          {"trials", std::move(t)},
          {"map", map}};
}

nlohmann::json GridReport::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cells) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell ? nlohmann::json(*cell) : nlohmann::json());
    rows.push_back(std::move(r));
  }
  return {{"kind", "grid"},       {"gold", gold},   {"sent_counts", sent_counts},
          {"patt_counts", patt_counts}, {"seeds", seeds}, {"map", std::move(rows)}};
}

nlohmann::json SweepReport::ToJson() const {
  return {{"kind", "sweep-q"}, {"gold", gold},   {"method", method},
          {"q_values", q_values}, {"seeds", seeds}, {"map", map}};
}

nlohmann::json SubsetReport::ToJson() const {
  return {{"kind", "subset"},
          {"subset", subset},
          {"superset", superset},
          {"method", method},
          {"seeds", seeds},
          {"subset_ap", subset_ap},
          {"superset_ap", superset_ap},
          {"subset_map", subset_map},
          {"superset_map", superset_map}};
}

std::string RenderReportText(const nlohmann::json& report) {
  std::ostringstream out;
  const std::string kind = report.value("kind", "");
  auto cell = [](const nlohmann::json& v) {
    return v.is_null() ? std::string("NA") : Fixed(v.get<double>(), 3);
  };
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.insert(0, w - s.size(), ' ');
    return s;
  };
  if (kind == "evaluate") {
    out << "set " << report["gold"].get<std::string>() << "  method "
        << report["method"].get<std::string>() << "  MAP "
        << Fixed(report["map"].get<double>()) << '\n';
    out << "trial      AP  seeds\n";
    for (const auto& t : report["trials"]) {
      out << pad(std::to_string(t["trial"].get<std::size_t>()), 5) << "  "
          << Fixed(t["ap"].get<double>()) << "  "
          << JoinComma(t["seeds"].get<std::vector<std::string>>()) << '\n';
    }
  } else if (kind == "grid") {
    out << "set " << report["gold"].get<std::string>() << "  (rows #patt, columns #sent)\n";
    out << pad("#patt", 6);
    for (const auto& s : report["sent_counts"]) out << pad(std::to_string(s.get<std::size_t>()), 7);
    out << '\n';
    const auto& patt = report["patt_counts"];
    for (std::size_t p = 0; p < patt.size(); ++p) {
      out << pad(std::to_string(patt[p].get<std::size_t>()), 6);
      for (const auto& v : report["map"][p]) out << pad(cell(v), 7);
      out << '\n';
    }
  } else if (kind == "sweep-q") {
    out << "set " << report["gold"].get<std::string>() << "  method "
        << report["method"].get<std::string>() << '\n';
    out << pad("q", 6) << pad("MAP", 7) << '\n';
    for (std::size_t i = 0; i < report["q_values"].size(); ++i) {
      out << pad(std::to_string(report["q_values"][i].get<std::size_t>()), 6)
          << pad(cell(report["map"][i]), 7) << '\n';
    }
  } else if (kind == "subset") {
    out << "method " << report["method"].get<std::string>() << '\n';
    out << pad(report["subset"].get<std::string>(), 16) << "  "
        << Fixed(report["subset_map"].get<double>(), 3) << '\n';
    out << pad(report["superset"].get<std::string>(), 16) << "  "
        << Fixed(report["superset_map"].get<double>(), 3) << '\n';
  } else {
    throw Error(ErrorCode::kValidation, "unknown report kind '" + kind + "'");
  }
  return out.str();
}

}  // namespace tse
