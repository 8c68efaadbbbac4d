// Copyright 2026 The ocrkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "ocrkit/errormodel.h"
#include "ocrkit/status.h"
#include "ocrkit/unicode.h"
#include "test_util.h"

namespace ocrkit {
namespace {

ErrorEntry Sub(std::string s, std::string t, std::uint64_t count) {
  return {ErrorKind::kSubstitute, std::move(s), std::move(t), count, 0.0};
}
ErrorEntry Del(std::string s, std::uint64_t count) {
  return {ErrorKind::kDelete, std::move(s), std::nullopt, count, 0.0};
}
ErrorEntry Ins(std::string t, std::uint64_t count) {
  return {ErrorKind::kInsert, std::nullopt, std::move(t), count, 0.0};
}

ErrorModel Model(std::vector<ErrorEntry> entries) {
  ErrorModel m;
  for (const ErrorEntry& e : entries) m.total_error_count += e.count;
  for (ErrorEntry& e : entries) {
    e.freq = static_cast<double>(e.count) / static_cast<double>(m.total_error_count);
  }
  m.entries = std::move(entries);
  return m;
}

TEST(KindSet, ParseAndLabel) {
  EXPECT_EQ(KindSet::Parse("all"), KindSet::All());
  EXPECT_EQ(KindSet::Parse("sub"), KindSet::Of(ErrorKind::kSubstitute));
  EXPECT_EQ(KindSet::Parse("del+ins").label(), "ins+del");
  EXPECT_EQ(KindSet::Parse("substitute,delete,insert").label(), "all");
  EXPECT_THROW(KindSet::Parse("swap"), Error);
}

TEST(Mine, IdentityCorpusIsEmpty) {
  const ErrorModel m = MineErrorModel({{"1", "ab", "ab"}});
  EXPECT_TRUE(m.entries.empty());
  EXPECT_EQ(m.total_error_count, 0u);
}

TEST(Mine, SingleSubstitution) {
  const ErrorModel m = MineErrorModel({{"1", "abc", "adc"}, {"2", "abx", "adx"}});
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].kind, ErrorKind::kSubstitute);
  EXPECT_EQ(m.entries[0].source, "b");
  EXPECT_EQ(m.entries[0].target, "d");
  EXPECT_EQ(m.entries[0].count, 2u);
  EXPECT_DOUBLE_EQ(m.entries[0].freq, 1.0);
  EXPECT_EQ(m.total_error_count, 2u);
}

TEST(Mine, DroppedSpacesTopTheDeletes) {
  // Hypotheses lose word spaces and one letter, as in flattened UDHR scans.
  const std::vector<TextPair> pairs = {
      {"1", "all human beings are born free", "allhumanbeings areborn free"},
      {"2", "everyone has the right to life", "everyonehas theright tolife"},
      {"3", "no one shall be held in slavery", "no oneshall beheld in slavry"},
  };
  const ErrorModel m = MineErrorModel(pairs, "eng");
  ASSERT_FALSE(m.entries.empty());
  EXPECT_EQ(m.entries[0].kind, ErrorKind::kDelete);
  EXPECT_EQ(m.entries[0].source, " ");
  EXPECT_EQ(m.entries[0].count, 8u);
}

TEST(Mine, KhmerSubstitution) {
  const ErrorModel m = MineErrorModel({{"1", "ដក", "តក"}}, "khm");
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].source, "ដ");
  EXPECT_EQ(m.entries[0].target, "ត");
}

TEST(TopK, KeepsAllWhenKExceedsSize) {
  const ErrorModel m = Model({Sub("a", "b", 3), Del("c", 2), Ins("d", 1)});
  const ErrorModel top = TopK(m, 10);
  ASSERT_EQ(top.entries.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(top.entries[i].freq, m.entries[i].freq);
}

TEST(TopK, Renormalizes) {
  const ErrorModel m =
      Model({Sub("a", "b", 5), Sub("a", "c", 3), Sub("a", "d", 2), Sub("a", "e", 1)});
  const ErrorModel top = TopK(m, 2);
  ASSERT_EQ(top.entries.size(), 2u);
  EXPECT_EQ(top.entries[0].count, 5u);
  EXPECT_EQ(top.entries[1].count, 3u);
  EXPECT_DOUBLE_EQ(top.entries[0].freq, 0.625);
  EXPECT_DOUBLE_EQ(top.entries[1].freq, 0.375);
}

TEST(TopK, TieBreakByKey) {
  const ErrorModel m = Model({Sub("b", "a", 4), Sub("a", "z", 4)});
  const ErrorModel top = TopK(m, 1);
  ASSERT_EQ(top.entries.size(), 1u);
  EXPECT_EQ(top.entries[0].source, "a");
  EXPECT_EQ(TopK(Model({Sub("a", "b", 4), Ins("x", 4)}), 1).entries[0].kind,
            ErrorKind::kInsert);
}

TEST(FilterKinds, Examples) {
  const ErrorModel mixed = Model({Sub("a", "b", 6), Del("c", 4)});
  const ErrorModel subs = FilterKinds(mixed, KindSet::Of(ErrorKind::kSubstitute));
  ASSERT_EQ(subs.entries.size(), 1u);
  EXPECT_EQ(subs.entries[0].kind, ErrorKind::kSubstitute);

  const ErrorModel dels = FilterKinds(mixed, KindSet::Of(ErrorKind::kDelete));
  ASSERT_EQ(dels.entries.size(), 1u);
  EXPECT_DOUBLE_EQ(dels.entries[0].freq, 1.0);

  try {
    FilterKinds(Model({Del("c", 4)}), KindSet::Of(ErrorKind::kInsert));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyModel);
  }
}

TEST(ModelJson, RoundTripAndAsciiEscapes) {
  ErrorModel m = Model({Sub("ដ", "ត", 3), Del("ي", 2), Ins(" ", 1)});
  m.language = "pus";
  const std::string json = ErrorModelToJson(m);
  for (unsigned char c : json) EXPECT_LT(c, 0x80);
  EXPECT_NE(json.find("\\u178a"), std::string::npos);
  const ErrorModel back = ErrorModelFromJson(json);
  EXPECT_EQ(back, m);
  EXPECT_EQ(ErrorModelToJson(back), json);
}

TEST(ModelJson, RejectsInconsistentEntries) {
  EXPECT_THROW(ErrorModelFromJson(R"({"language":"x","total_error_count":1,)"
                                  R"("entries":[{"kind":"insert","source":"a","target":null,)"
                                  R"("count":1,"freq":1.0}]})"),
               Error);
  EXPECT_THROW(ErrorModelFromJson("{"), Error);
}

// ---- properties

TEST(MineProperty, IdenticalPairsGiveEmptyModel) {
  std::mt19937_64 rng(31);
  std::vector<TextPair> pairs;
  for (int i = 0; i < 50; ++i) {
    const std::string s = EncodeUtf8(testing::RandomU32(rng, 30, U"abកខ "));
    pairs.push_back({std::to_string(i), s, s});
  }
  EXPECT_TRUE(MineErrorModel(pairs).entries.empty());
}

TEST(MineProperty, DeterministicAcrossParallelism) {
  std::mt19937_64 rng(32);
  std::vector<TextPair> pairs;
  for (int i = 0; i < 200; ++i) {
    // References are non-empty: mining rejects an empty reference.
    pairs.push_back({std::to_string(i), EncodeUtf8(U"a" + testing::RandomU32(rng, 30, U"abcd ")),
                     EncodeUtf8(testing::RandomU32(rng, 30, U"abcd "))});
  }
  const std::string one = ErrorModelToJson(MineErrorModel(pairs, "x", {}, 1));
  EXPECT_EQ(one, ErrorModelToJson(MineErrorModel(pairs, "x", {}, 8)));
  EXPECT_EQ(one, ErrorModelToJson(MineErrorModel(pairs, "x", {}, 1)));
}

TEST(MineProperty, CountsMatchAlignmentDistance) {
  std::mt19937_64 rng(33);
  std::vector<TextPair> pairs;
  std::size_t total = 0;
  for (int i = 0; i < 100; ++i) {
    const auto r = U"b" + testing::RandomU32(rng, 20, U"abc ");
    const auto h = testing::RandomU32(rng, 20, U"abc ");
    total += testing::MemoDistance(r, h);
    pairs.push_back({std::to_string(i), EncodeUtf8(r), EncodeUtf8(h)});
  }
  const ErrorModel m = MineErrorModel(pairs);
  EXPECT_EQ(m.total_error_count, total);
  double freq = 0;
  std::uint64_t count = 0;
  for (const ErrorEntry& e : m.entries) {
    freq += e.freq;
    count += e.count;
  }
  EXPECT_EQ(count, total);
  EXPECT_NEAR(freq, 1.0, 1e-9);
  EXPECT_TRUE(std::is_sorted(m.entries.begin(), m.entries.end(), EntryRankLess));
}

}  // namespace
}  // namespace ocrkit
