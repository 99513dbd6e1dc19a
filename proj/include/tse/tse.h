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

/*
 * C interface of the term-set-expansion library.
 *
 * Objects are opaque handles released by their matching *_free function.
 * Every fallible call returns a tse_status; on failure the message is
 * available from tse_last_error() on the same thread until the next call.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with tse_string_free().
 *
 * Configuration and reports cross the boundary as JSON text. A method
 * configuration object accepts the keys
 *   method, sentences, patterns, diversity, max_rank_cap, q, max_occ,
 *   candidates, freq_cap, top_n, fallback_top_q, workers
 * and experiment calls additionally read
 *   trials, seed_size, rng, sent_counts, patt_counts, q_values.
 * Missing keys take the method's defaults.
 */

#ifndef TSE_TSE_H_
#define TSE_TSE_H_

#include <stddef.h>

#if defined(TSE_BUILDING_LIBRARY)
#define TSE_API __attribute__((visibility("default")))
#else
#define TSE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tse_status {
  TSE_OK = 0,
  TSE_ERR_VALIDATION = 1,
  TSE_ERR_IO = 2,
  TSE_ERR_EMPTY_CORPUS = 3,
  TSE_ERR_INVALID_OCCURRENCE = 4,
  TSE_ERR_MISSING_SEED = 5,
  TSE_ERR_OOV_SEED = 6,
  TSE_ERR_TRANSPORT = 7,
  TSE_ERR_TRUNCATION = 8,
  TSE_ERR_CAPABILITY = 9,
  TSE_ERR_INVALID_WORLD = 10,
  TSE_ERR_CORRUPT_TABLE = 11,
  TSE_ERR_UNDEFINED_METRIC = 12,
  TSE_ERR_INTERNAL = 13
} tse_status;

typedef struct tse_corpus tse_corpus;
typedef struct tse_backend tse_backend;
typedef struct tse_embeddings tse_embeddings;
typedef struct tse_gold tse_gold;
typedef struct tse_patterns tse_patterns;
typedef struct tse_expansion tse_expansion;
typedef struct tse_server tse_server;

/* ---- misc ---- */

TSE_API const char* tse_version(void);
TSE_API const char* tse_status_name(tse_status status);
TSE_API const char* tse_last_error(void);
TSE_API void tse_string_free(char* s);
/* One of "debug", "info", "warn", "error", "off". */
TSE_API tse_status tse_set_log_level(const char* level);

/* ---- corpus ---- */

TSE_API tse_status tse_corpus_build_file(const char* path, int lowercase, tse_corpus** out);
TSE_API tse_status tse_corpus_build_lines(const char* const* lines, size_t count,
                                          int lowercase, tse_corpus** out);
TSE_API tse_status tse_corpus_load(const char* index_path, tse_corpus** out);
TSE_API tse_status tse_corpus_save(const tse_corpus* corpus, const char* index_path);
TSE_API tse_status tse_corpus_stats(const tse_corpus* corpus, size_t* sentences,
                                    size_t* tokens, size_t* types);
TSE_API tse_status tse_corpus_count_occurrences(const tse_corpus* corpus, const char* term,
                                                size_t* count);
TSE_API void tse_corpus_free(tse_corpus* corpus);

/* ---- LM backends ---- */

TSE_API tse_status tse_backend_mock_file(const char* world_path, tse_backend** out);
TSE_API tse_status tse_backend_mock_json(const char* world_json, tse_backend** out);
/* timeout_ms <= 0 and max_in_flight <= 0 select the defaults. */
TSE_API tse_status tse_backend_http(const char* base_url, int timeout_ms, int max_in_flight,
                                    tse_backend** out);
/* Memoizing wrapper. cache_file may be NULL for an in-memory cache. The
 * wrapper keeps `inner` alive; the caller still frees its own handle. */
TSE_API tse_status tse_backend_cached(const tse_backend* inner, const char* cache_file,
                                      tse_backend** out);
TSE_API tse_status tse_backend_info(const tse_backend* backend, char** info_json);
TSE_API tse_status tse_backend_contains(const tse_backend* backend, const char* term,
                                        int* in_vocab);
/* Request and response use the fill-mask wire format. */
TSE_API tse_status tse_backend_complete(const tse_backend* backend, const char* request_json,
                                        char** response_json);
TSE_API void tse_backend_free(tse_backend* backend);

/* Serves a backend over HTTP. port 0 picks a free port. */
TSE_API tse_status tse_server_start(const tse_backend* backend, const char* host, int port,
                                    int threads, tse_server** out);
TSE_API int tse_server_port(const tse_server* server);
TSE_API void tse_server_free(tse_server* server); /* stops it */

/* ---- embeddings and gold sets ---- */

TSE_API tse_status tse_embeddings_load(const char* path, tse_embeddings** out);
TSE_API size_t tse_embeddings_size(const tse_embeddings* embeddings);
TSE_API void tse_embeddings_free(tse_embeddings* embeddings);

TSE_API tse_status tse_gold_load(const char* path, tse_gold** out);
TSE_API size_t tse_gold_size(const tse_gold* gold);
TSE_API const char* tse_gold_name(const tse_gold* gold);
TSE_API int tse_gold_is_open(const tse_gold* gold);
TSE_API void tse_gold_free(tse_gold* gold);

/* ---- expansion ---- */

/* Borrowed inputs for a run; any member may be NULL/0 when the method does
 * not need it. */
typedef struct tse_resources {
  const tse_corpus* corpus;
  const tse_backend* backend;
  const tse_embeddings* embeddings;
  const char* const* candidates; /* explicit candidate list */
  size_t candidate_count;
} tse_resources;

/* Fills in defaults and validates a method configuration, returning the
 * resolved object. */
TSE_API tse_status tse_config_resolve(const char* config_json, char** resolved_json);

TSE_API tse_status tse_mine(const tse_resources* resources, const char* config_json,
                            const char* const* seeds, size_t seed_count,
                            tse_patterns** out);

/* Runs the configured method. `oracle` is required for mpb2o. `patterns`
 * may be NULL; otherwise it receives the indicative patterns of mining
 * methods (or NULL for s2v). top_n 0 uses the configuration's value or 200. */
TSE_API tse_status tse_expand(const tse_resources* resources, const char* config_json,
                              const char* const* seeds, size_t seed_count,
                              const tse_gold* oracle, size_t top_n, tse_expansion** out,
                              tse_patterns** patterns);

/* Expands from previously mined patterns (mpb1, mpb2, mpb2o). */
TSE_API tse_status tse_expand_with_patterns(const tse_resources* resources,
                                            const char* config_json,
                                            const tse_patterns* patterns,
                                            const tse_gold* oracle, size_t top_n,
                                            tse_expansion** out);

TSE_API tse_status tse_patterns_read(const char* path, tse_patterns** out);
TSE_API tse_status tse_patterns_write(const tse_patterns* patterns, const char* path,
                                      const char* config_json);
TSE_API size_t tse_patterns_size(const tse_patterns* patterns);
TSE_API void tse_patterns_free(tse_patterns* patterns);

TSE_API size_t tse_expansion_size(const tse_expansion* expansion);
TSE_API const char* tse_expansion_term(const tse_expansion* expansion, size_t i);
TSE_API double tse_expansion_score(const tse_expansion* expansion, size_t i);
TSE_API tse_status tse_expansion_write(const tse_expansion* expansion, const char* path,
                                       const char* config_json);
TSE_API tse_status tse_expansion_read(const char* path, tse_expansion** out);
TSE_API void tse_expansion_free(tse_expansion* expansion);

/* ---- evaluation ---- */

/* AP of an expansion against a gold set; cutoff 0 means none. */
TSE_API tse_status tse_average_precision(const tse_expansion* expansion, const tse_gold* gold,
                                         size_t cutoff, double* ap);

TSE_API tse_status tse_evaluate(const tse_resources* resources, const char* config_json,
                                const tse_gold* gold, char** report_json);
TSE_API tse_status tse_grid(const tse_resources* resources, const char* config_json,
                            const tse_gold* gold, char** report_json);
TSE_API tse_status tse_sweep_q(const tse_resources* resources, const char* config_json,
                               const tse_gold* gold, char** report_json);
TSE_API tse_status tse_subset(const tse_resources* resources, const char* config_json,
                              const tse_gold* subset, const tse_gold* superset,
                              char** report_json);
TSE_API tse_status tse_report_render(const char* report_json, char** text);

/* ---- synthetic worlds ---- */

/* Writes world.json, corpus.txt, embeddings.txt and gold/ into dir.
 * options_json may be NULL or set any of: categories, members, noise_level,
 * total_sentences, dim, seed, multiword_last. */
TSE_API tse_status tse_synth_write(const char* dir, const char* options_json);

#ifdef __cplusplus
}
#endif

#endif /* TSE_TSE_H_ */
