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

// Writes a generated test world: mock LM, corpus, gold sets, embeddings.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "tse/tse.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic term-set-expansion world"};
  std::string out;
  nlohmann::json options = nlohmann::json::object();
  std::size_t seed = 7, categories = 5, members = 30, sentences = 2000, dim = 32;
  double noise = 1.0;
  bool single_only = false;
  app.add_option("--out", out, "output directory")->required();
  auto* o_seed = app.add_option("--seed", seed, "generator seed")->capture_default_str();
  auto* o_cat = app.add_option("--categories", categories)->capture_default_str();
  auto* o_mem = app.add_option("--members", members, "members per category")
                    ->capture_default_str();
  auto* o_sent = app.add_option("--sentences", sentences, "minimum corpus size")
                     ->capture_default_str();
  auto* o_dim = app.add_option("--dim", dim, "embedding dimension")->capture_default_str();
  auto* o_noise = app.add_option("--noise-level", noise, "distractor template density")
                      ->capture_default_str();
  app.add_flag("--single-token", single_only, "no multi-word members");
  CLI11_PARSE(app, argc, argv);

  if (o_seed->count()) options["seed"] = seed;
  if (o_cat->count()) options["categories"] = categories;
  if (o_mem->count()) options["members"] = members;
  if (o_sent->count()) options["total_sentences"] = sentences;
  if (o_dim->count()) options["dim"] = dim;
  if (o_noise->count()) options["noise_level"] = noise;
  if (single_only) options["multiword_last"] = false;
  if (tse_synth_write(out.c_str(), options.dump().c_str()) != TSE_OK) {
    std::cerr << "error: " << tse_last_error() << "\n";
    return 2;
  }
  return 0;
}
