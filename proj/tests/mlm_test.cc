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
#include <fstream>
#include <memory>

#include "fixtures.h"
#include "tse/cache.h"
#include "tse/error.h"
#include "tse/mock_lm.h"
#include "tse/wire.h"

namespace tse {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternal;
}

TEST(MockLm, VocabularyIsSortedUnionOfSingleTokens) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto& vocab = lm.vocabulary();
  EXPECT_EQ(vocab.size(), 24u);
  EXPECT_TRUE(std::is_sorted(vocab.begin(), vocab.end()));
  EXPECT_TRUE(lm.Contains("Dog"));
  EXPECT_TRUE(lm.Contains("sleeps"));
  EXPECT_FALSE(lm.Contains("new york"));
  EXPECT_FALSE(lm.Contains("zebra"));
  EXPECT_EQ(lm.Info().vocab_size, 24u);
}

TEST(MockLm, DistributionMatchesSmoothedCounts) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto p = MaskedPattern::FromText("my pet [MASK] sleeps .");
  const double v = 24.0;
  const double denom = 10.0 + 0.01 * v;
  const auto c = lm.Complete(p, 3, {"dog", "cow", "idea", "new york"});
  ASSERT_EQ(c.top.size(), 3u);
  EXPECT_EQ(c.top[0].term, "dog");
  EXPECT_EQ(c.top[1].term, "cat");
  EXPECT_EQ(c.top[2].term, "horse");
  EXPECT_NEAR(c.top[0].logprob, std::log(4.01 / denom), 1e-12);
  EXPECT_EQ(c.lookup.RankOf("dog"), 1u);
  EXPECT_EQ(c.lookup.RankOf("cow"), 4u);
  EXPECT_NEAR(c.lookup.Find("cow")->logprob, std::log(1.01 / denom), 1e-12);
  // Zero-count terms tie and fall back to term order: "." sorts first.
  const auto full = lm.Distribution(p);
  EXPECT_EQ(full[4].term, ".");
  EXPECT_FALSE(c.lookup.RankOf("new york").has_value());
  EXPECT_TRUE(c.lookup.requested("idea"));
  EXPECT_THROW(c.lookup.Find("cat"), Error);
}

TEST(MockLm, TermWeightsAddToCategoryWeights) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto c = lm.Complete(MaskedPattern::FromText("the [MASK] ate grass ."), 1, {"cow", "dog"});
  // cow reaches 1 + 3, tying with dog, and wins on term order.
  EXPECT_EQ(c.top[0].term, "cow");
  EXPECT_EQ(c.lookup.RankOf("dog"), 2u);
}

TEST(MockLm, UnknownPatternsUseSummedCounts) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto p = MaskedPattern::FromText("nothing like [MASK] here");
  EXPECT_FALSE(lm.MatchesTemplate(p));
  const auto c = lm.Complete(p, 2, {});
  // dog: 4 + 4 + 2 = 10; cow: 1 + 1 + 3 + 0.5 = 5.5; table: 2.
  EXPECT_EQ(c.top[0].term, "dog");
  double total = 0.0;
  for (const auto& e : lm.Distribution(p)) total += std::exp(e.logprob);
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(MockLm, DistributionIsSortedAndComplete) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto d = lm.Distribution(MaskedPattern::FromText("i saw a [MASK] ."));
  EXPECT_EQ(d.size(), 24u);
  EXPECT_TRUE(std::is_sorted(d.begin(), d.end(), CompletionBefore));
}

TEST(MockLm, RejectsBadWorlds) {
  auto world = tse_test::TinyWorld();
  world.smoothing = 0.0;
  EXPECT_EQ(CodeOf([&] { MockBackend{world}; }), ErrorCode::kInvalidWorld);
  world = tse_test::TinyWorld();
  world.templates[0].categories["plant"] = 1.0;
  EXPECT_EQ(CodeOf([&] { MockBackend{world}; }), ErrorCode::kInvalidWorld);
  world = tse_test::TinyWorld();
  world.templates[0].text = "no mask";
  EXPECT_EQ(CodeOf([&] { MockBackend{world}; }), ErrorCode::kInvalidWorld);
  world = tse_test::TinyWorld();
  world.categories[0].weights = {1.0};
  EXPECT_EQ(CodeOf([&] { MockBackend{world}; }), ErrorCode::kInvalidWorld);
  EXPECT_EQ(CodeOf([] { MockWorld::FromJson(nlohmann::json::parse("{}")); }),
            ErrorCode::kInvalidWorld);
}

TEST(MockLm, WorldJsonRoundTrip) {
  const auto world = tse_test::TinyWorld();
  const auto again = MockWorld::FromJson(world.ToJson());
  EXPECT_EQ(again.ToJson(), world.ToJson());
}

TEST(MockLm, RequestValidation) {
  auto world = tse_test::TinyWorld();
  world.max_context = 4;
  world.max_top_q = 5;
  const MockBackend lm(world);
  const auto p = MaskedPattern::FromText("my pet [MASK] sleeps .");
  EXPECT_EQ(CodeOf([&] { lm.Complete(p, 0, {}); }), ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([&] { lm.Complete(p, 3, {}); }), ErrorCode::kTruncation);
  const auto short_p = MaskedPattern::FromText("a [MASK]");
  EXPECT_EQ(CodeOf([&] { lm.Complete(short_p, 6, {}); }), ErrorCode::kCapability);
  EXPECT_FALSE(lm.SupportsFullDistribution());
  EXPECT_EQ(lm.Complete(short_p, 5, {}).top.size(), 5u);
}

TEST(MockLm, TopQLargerThanVocabularyIsClamped) {
  const MockBackend lm(tse_test::TinyWorld());
  EXPECT_EQ(lm.Complete(MaskedPattern::FromText("a [MASK]"), 1000, {}).top.size(), 24u);
  EXPECT_TRUE(lm.SupportsFullDistribution());
}

TEST(Wire, CompletionRoundTrip) {
  const MockBackend lm(tse_test::TinyWorld());
  const auto c =
      lm.Complete(MaskedPattern::FromText("my pet [MASK] sleeps ."), 5, {"cow", "new york"});
  const auto j = wire::CompletionToJson(c);
  EXPECT_TRUE(j["lookup"]["new york"].is_null());
  EXPECT_EQ(j["lookup"]["cow"]["rank"], 4);
  EXPECT_EQ(wire::CompletionFromJson(j), c);
}

TEST(Wire, RequestRoundTripAndValidation) {
  const auto p = MaskedPattern::FromText("my pet [MASK] sleeps .");
  const auto j = wire::RequestToJson(p, 7, {"dog"});
  const auto r = wire::RequestFromJson(j);
  EXPECT_EQ(r.pattern, p);
  EXPECT_EQ(r.top_q, 7u);
  EXPECT_EQ(r.terms, std::vector<std::string>{"dog"});
  auto bad = j;
  bad["mask_index"] = 0;
  EXPECT_EQ(CodeOf([&] { wire::RequestFromJson(bad); }), ErrorCode::kValidation);
  bad = j;
  bad.erase("tokens");
  EXPECT_EQ(CodeOf([&] { wire::RequestFromJson(bad); }), ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([&] { wire::RequestFromJson(nlohmann::json::array()); }),
            ErrorCode::kValidation);
}

TEST(Wire, ErrorCodesMapBothWays) {
  for (const auto code : {ErrorCode::kValidation, ErrorCode::kTruncation,
                          ErrorCode::kCapability}) {
    EXPECT_EQ(wire::WireCodeToError(wire::ErrorToWireCode(code)), code);
  }
  EXPECT_STREQ(wire::ErrorToWireCode(ErrorCode::kTruncation), wire::kContextTooLong);
  EXPECT_STREQ(wire::ErrorToWireCode(ErrorCode::kCapability), wire::kTopQTooLarge);
}

// Counts calls to the wrapped backend.
class CountingBackend final : public MlmBackend {
 public:
  explicit CountingBackend(std::shared_ptr<const MlmBackend> inner) : inner_(inner) {}
  BackendInfo Info() const override { return inner_->Info(); }
  Completion Complete(const MaskedPattern& p, std::size_t q,
                      const std::vector<std::string>& t) const override {
    ++calls;
    return inner_->Complete(p, q, t);
  }
  bool Contains(std::string_view term) const override { return inner_->Contains(term); }
  mutable std::atomic<int> calls{0};

 private:
  std::shared_ptr<const MlmBackend> inner_;
};

TEST(Cache, MemoizesAndPersists) {
  tse_test::TempDir dir("cache");
  const auto file = dir.file("c.jsonl");
  auto counting =
      std::make_shared<CountingBackend>(std::make_shared<MockBackend>(tse_test::TinyWorld()));
  const auto p = MaskedPattern::FromText("my pet [MASK] sleeps .");
  Completion first;
  {
    CachingBackend cache(counting, file);
    first = cache.Complete(p, 3, {"dog"});
    EXPECT_EQ(cache.Complete(p, 3, {"dog"}), first);
    EXPECT_EQ(counting->calls.load(), 1);
    cache.Complete(p, 4, {"dog"});
    cache.Complete(p, 3, {"cat"});
    EXPECT_EQ(counting->calls.load(), 3);
    EXPECT_EQ(cache.hits(), 1u);
    EXPECT_EQ(cache.misses(), 3u);
    EXPECT_EQ(cache.size(), 3u);
  }
  CachingBackend reopened(counting, file);
  EXPECT_EQ(reopened.size(), 3u);
  EXPECT_EQ(reopened.Complete(p, 3, {"dog"}), first);
  EXPECT_EQ(counting->calls.load(), 3);
  EXPECT_EQ(reopened.id(), counting->id());
}

TEST(Cache, CorruptFileIsReported) {
  tse_test::TempDir dir("cache");
  const auto file = dir.file("c.jsonl");
  std::ofstream(file) << "{not json\n";
  auto lm = std::make_shared<MockBackend>(tse_test::TinyWorld());
  EXPECT_EQ(CodeOf([&] { CachingBackend(lm, file); }), ErrorCode::kIo);
}

TEST(Cache, ErrorsAreNotCached) {
  auto world = tse_test::TinyWorld();
  world.max_context = 3;
  auto counting = std::make_shared<CountingBackend>(std::make_shared<MockBackend>(world));
  CachingBackend cache(counting);
  const auto p = MaskedPattern::FromText("my pet [MASK] sleeps .");
  EXPECT_THROW(cache.Complete(p, 1, {}), Error);
  EXPECT_THROW(cache.Complete(p, 1, {}), Error);
  EXPECT_EQ(counting->calls.load(), 2);
  EXPECT_EQ(cache.size(), 0u);
}

}  // namespace
}  // namespace tse
