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

// Drives the installed command-line tools as separate processes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "temp_dir.h"
#include "nlohmann/json.hpp"

namespace {

namespace fs = std::filesystem;

int RunCli(const std::string& args, std::string* output = nullptr) {
  const std::string log = (fs::temp_directory_path() /
                           ("tse-cli-out-" + std::to_string(::getpid()))).string();
  const std::string cmd = std::string(TSE_CLI) + " " + args + " > " + log + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  fs::remove(log);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    world_ = new tse_test::TempDir("cli-world");
    const std::string cmd = std::string(TSE_SYNTH) + " --out " + world_->path().string() +
                            " --categories 3 --members 12 --sentences 500 > /dev/null";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
  }
  static void TearDownTestSuite() {
    delete world_;
    world_ = nullptr;
  }
  static std::string W(const std::string& name) { return world_->file(name); }
  static std::string Seeds() {
    std::ifstream in(W("gold/cat0.txt"));
    std::string line, out;
    int n = 0;
    while (n < 3 && std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      out += (n++ ? "," : "") + line.substr(0, line.find('\t'));
    }
    return out;
  }
  static tse_test::TempDir* world_;
};

tse_test::TempDir* Cli::world_ = nullptr;

// Every artifact of each subcommand must be byte-identical across two runs.
TEST_F(Cli, RepeatedRunsProduceIdenticalArtifacts) {
  const std::string base = " --corpus " + W("corpus.txt") + " --mock-world " +
                           W("world.json") + " --log-level off";
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"index", "index --corpus " + W("corpus.txt") + " --log-level off"},
      {"mine", "mine" + base + " --seeds " + Seeds() + " --patterns 10"},
      {"expand", "expand" + base + " --seeds " + Seeds() + " --patterns 10 --top-n 40"},
      {"expand-mpb2", "expand" + base + " --embeddings " + W("embeddings.txt") +
                          " --method mpb2 --candidates 40 --seeds " + Seeds()},
      {"evaluate", "evaluate" + base + " --set " + W("gold/cat1.txt") +
                       " --patterns 10 --trials 2 --workers 3"},
      {"grid", "grid" + base + " --set " + W("gold/cat0.txt") +
                   " --trials 1 --sent-counts 5,30 --patt-counts 2,10"},
      {"sweep-q", "sweep-q" + base + " --set " + W("gold/cat2.txt") +
                      " --method mpb2o --trials 1 --q-values 1,10"},
      {"subset", "subset" + base + " --subset " + W("gold/cat0.txt") + " --superset " +
                     W("gold/cat0.txt") + " --patterns 5 --trials 1"},
  };
  for (const auto& [name, args] : commands) {
    tse_test::TempDir a("cli-a"), b("cli-b");
    std::string out;
    ASSERT_EQ(RunCli(args + " --out " + a.path().string(), &out), 0) << name << "\n" << out;
    ASSERT_EQ(RunCli(args + " --out " + b.path().string()), 0) << name;
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(a.path())) {
      const auto other = b.path() / entry.path().filename();
      ASSERT_TRUE(fs::exists(other)) << name << ": " << other;
      EXPECT_EQ(Slurp(entry.path()), Slurp(other)) << name << ": " << entry.path().filename();
      ++files;
    }
    EXPECT_GT(files, 0u) << name;
  }
}

TEST_F(Cli, ArtifactsCarryTheirConfiguration) {
  tse_test::TempDir out("cli-cfg");
  const std::string base = " --corpus " + W("corpus.txt") + " --mock-world " +
                           W("world.json") + " --log-level off --out " + out.path().string();
  ASSERT_EQ(RunCli("mine" + base + " --seeds " + Seeds() + " --patterns 7"), 0);
  std::ifstream in(out.file("patterns.jsonl"));
  std::string first;
  std::getline(in, first);
  const auto meta = nlohmann::json::parse(first)["meta"];
  EXPECT_EQ(meta["config"]["patterns"], 7);
  EXPECT_FALSE(meta["config"].contains("workers"));

  // Reusing the artifact as --config reproduces the run.
  tse_test::TempDir again("cli-cfg2");
  ASSERT_EQ(RunCli("mine --config " + out.file("patterns.jsonl") + " --log-level off --out " +
                again.path().string()),
            0);
  EXPECT_EQ(Slurp(out.file("patterns.jsonl")), Slurp(again.file("patterns.jsonl")));

  // A key = value file works the same way, and flags override it.
  const auto cfg = out.file("run.conf");
  std::ofstream(cfg) << "# test\ncorpus = " << W("corpus.txt") << "\nmock_world = "
                     << W("world.json") << "\nseeds = " << Seeds() << "\npatterns = 3\n";
  tse_test::TempDir third("cli-cfg3");
  ASSERT_EQ(RunCli("mine --config " + cfg + " --patterns 7 --log-level off --out " +
                third.path().string()),
            0);
  EXPECT_EQ(Slurp(out.file("patterns.jsonl")), Slurp(third.file("patterns.jsonl")));
}

TEST_F(Cli, ExitCodes) {
  const std::string base = " --corpus " + W("corpus.txt") + " --mock-world " +
                           W("world.json") + " --log-level off --out " +
                           (fs::temp_directory_path() / "tse-cli-codes").string();
  std::string out;
  EXPECT_EQ(RunCli("expand" + base + " --seeds zzzz,qqqq,wwww", &out), 3) << out;
  EXPECT_EQ(RunCli("expand" + base + " --seeds " + Seeds() + " --patterns 0", &out), 2) << out;
  EXPECT_NE(out.find("patterns"), std::string::npos);
  EXPECT_EQ(RunCli("expand --corpus /nonexistent.txt --mock-world " + W("world.json") +
                " --seeds a,b,c --log-level off"),
            2);
  EXPECT_EQ(RunCli("expand" + base + " --seeds " + Seeds() + " --method mpb2"), 2);
  EXPECT_EQ(RunCli("expand --corpus " + W("corpus.txt") +
                " --backend http://127.0.0.1:1 --seeds a,b,c --log-level off"),
            4);
  EXPECT_NE(RunCli("frobnicate"), 0);
  fs::remove_all(fs::temp_directory_path() / "tse-cli-codes");
}

}  // namespace
