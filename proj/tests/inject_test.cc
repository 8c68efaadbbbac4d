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

#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "ocrkit/corpus.h"
#include "ocrkit/inject.h"
#include "ocrkit/status.h"
#include "ocrkit/textmetrics.h"
#include "ocrkit/unicode.h"
#include "test_util.h"

namespace ocrkit {
namespace {

using testing::TempDir;

ErrorEntry Entry(ErrorKind kind, std::optional<std::string> s,
                 std::optional<std::string> t, double freq) {
  return {kind, std::move(s), std::move(t), static_cast<std::uint64_t>(freq * 1000), freq};
}

ErrorModel Model(std::vector<ErrorEntry> entries) {
  ErrorModel m;
  for (const ErrorEntry& e : entries) m.total_error_count += e.count;
  m.entries = std::move(entries);
  return m;
}

ErrorModel AToB() { return Model({Entry(ErrorKind::kSubstitute, "a", "b", 1.0)}); }

ErrorModel Mixed() {
  return Model({
      Entry(ErrorKind::kSubstitute, "e", "c", 0.2),
      Entry(ErrorKind::kDelete, " ", std::nullopt, 0.15),
      Entry(ErrorKind::kSubstitute, "l", "1", 0.12),
      Entry(ErrorKind::kInsert, std::nullopt, " ", 0.1),
      Entry(ErrorKind::kSubstitute, "o", "0", 0.1),
      Entry(ErrorKind::kDelete, "h", std::nullopt, 0.08),
      Entry(ErrorKind::kSubstitute, "n", "m", 0.08),
      Entry(ErrorKind::kInsert, std::nullopt, "i", 0.07),
      Entry(ErrorKind::kSubstitute, "a", "o", 0.05),
      Entry(ErrorKind::kDelete, "t", std::nullopt, 0.05),
  });
}

std::string RandomText(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  const std::u32string alpha = U"abcdefghijklmnopqrstuvwxyz      ";
  std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
  std::u32string s(n, U' ');
  for (auto& c : s) c = alpha[pick(rng)];
  return EncodeUtf8(s);
}

InjectionConfig Config(double rate, std::uint64_t seed = 1, KindSet kinds = KindSet::All()) {
  InjectionConfig c;
  c.target_cer = rate;
  c.seed = seed;
  c.kinds = kinds;
  return c;
}

TEST(TargetEditCount, RoundsHalfAway) {
  EXPECT_EQ(TargetEditCount(10, 100), 10u);
  EXPECT_EQ(TargetEditCount(2.5, 20), 1u);  // 0.5 rounds up
  EXPECT_EQ(TargetEditCount(0, 1000), 0u);
}

TEST(PlanEdits, ZeroTargetIsEmpty) {
  EXPECT_TRUE(PlanEdits("hello", AToB(), Config(0)).edits.empty());
}

TEST(PlanEdits, DistinctPositionsForSubstitutions) {
  const EditPlan plan = PlanEdits(std::string(100, 'a'), AToB(), Config(10));
  ASSERT_EQ(plan.edits.size(), 10u);
  std::set<std::size_t> positions;
  for (const PlannedEdit& e : plan.edits) positions.insert(e.index);
  EXPECT_EQ(positions.size(), 10u);
}

TEST(PlanEdits, NoSourceIsUnreachable) {
  try {
    PlanEdits("xyz xyz xyz", AToB(), Config(5, 1, KindSet::Of(ErrorKind::kSubstitute)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnreachable);
    EXPECT_NE(std::string(e.what()).find("max achievable"), std::string::npos);
  }
}

TEST(PlanEdits, RejectsOutOfRangeTarget) {
  EXPECT_THROW(PlanEdits("abc", AToB(), Config(101)), Error);
  EXPECT_THROW(PlanEdits("abc", AToB(), Config(-1)), Error);
}

TEST(ApplyPlan, Examples) {
  EXPECT_EQ(ApplyPlan("abc", EditPlan{{}, 3}), "abc");
  EXPECT_EQ(ApplyPlan("abc", EditPlan{{{1, Entry(ErrorKind::kSubstitute, "b", "d", 1)}}, 3}),
            "adc");
  const EditPlan plan{{{0, Entry(ErrorKind::kDelete, "a", std::nullopt, 1)},
                       {3, Entry(ErrorKind::kInsert, std::nullopt, "x", 1)}},
                      3};
  EXPECT_EQ(ApplyPlan("abc", plan), "bcx");
}

TEST(ApplyPlan, MismatchIsInternalError) {
  const EditPlan out_of_range{{{5, Entry(ErrorKind::kSubstitute, "b", "d", 1)}}, 3};
  const EditPlan wrong_source{{{0, Entry(ErrorKind::kSubstitute, "b", "d", 1)}}, 3};
  for (const EditPlan& p : {out_of_range, wrong_source}) {
    try {
      ApplyPlan("abc", p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInternal);
    }
  }
}

TEST(Inject, ZeroTargetIsIdentity) {
  const InjectionResult r = Inject("héllo  wörld", Mixed(), Config(0));
  EXPECT_EQ(r.noisy_text, "héllo  wörld");
  EXPECT_DOUBLE_EQ(r.achieved_cer, 0.0);
}

TEST(Inject, SubstitutionOnlyIsExact) {
  const InjectionResult r = Inject(std::string(100, 'a'), AToB(), Config(20, 7));
  EXPECT_DOUBLE_EQ(r.achieved_cer, 20.0);
  EXPECT_EQ(r.distance, 20u);
  EXPECT_FALSE(r.off_target);
}

TEST(Inject, MixedModelWithinTolerance) {
  const std::string text = RandomText(5, 10000);
  const InjectionResult r = Inject(text, Mixed(), Config(10, 3));
  EXPECT_NEAR(r.achieved_cer, 10.0, 0.5);
  EXPECT_FALSE(r.off_target);
}

TEST(Inject, SameSeedSameOutput) {
  const std::string text = RandomText(6, 2000);
  EXPECT_EQ(Inject(text, Mixed(), Config(10, 9)).noisy_text,
            Inject(text, Mixed(), Config(10, 9)).noisy_text);
  EXPECT_NE(Inject(text, Mixed(), Config(10, 9)).noisy_text,
            Inject(text, Mixed(), Config(10, 10)).noisy_text);
}

// ---- properties

TEST(InjectProperty, PlanInvariants) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::string text = RandomText(seed, 500);
    const EditPlan plan = PlanEdits(text, Mixed(), Config(15, seed));
    EXPECT_EQ(plan.edits.size(), TargetEditCount(15, 500));
    std::set<std::size_t> positions, gaps;
    for (std::size_t i = 0; i < plan.edits.size(); ++i) {
      const PlannedEdit& e = plan.edits[i];
      auto& seen = e.entry.kind == ErrorKind::kInsert ? gaps : positions;
      EXPECT_TRUE(seen.insert(e.index).second);
      if (i > 0) EXPECT_LE(plan.edits[i - 1].index, e.index);
    }
  }
}

TEST(InjectProperty, AchievedNeverExceedsPlannedRate) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::string text = RandomText(seed + 100, 400);
    const InjectionResult r = Inject(text, Mixed(), Config(12, seed));
    EXPECT_LE(r.achieved_cer,
              100.0 * static_cast<double>(r.plan.edits.size()) / 400.0 + 1e-9);
  }
}

TEST(InjectProperty, KindPurityChangesLength) {
  const std::string text = RandomText(7, 3000);
  const std::size_t n = 3000;
  const std::size_t e = TargetEditCount(10, n);
  const InjectionResult del =
      Inject(text, Mixed(), Config(10, 1, KindSet::Of(ErrorKind::kDelete)));
  EXPECT_EQ(DecodeUtf8(del.noisy_text).size(), n - e);
  const InjectionResult ins =
      Inject(text, Mixed(), Config(10, 1, KindSet::Of(ErrorKind::kInsert)));
  EXPECT_EQ(DecodeUtf8(ins.noisy_text).size(), n + e);
}

TEST(InjectProperty, MonotoneInRate) {
  const std::string text = RandomText(8, 10000);
  double previous = -1.0;
  for (int rate = 0; rate <= 20; rate += 2) {
    const InjectionResult r = Inject(text, Mixed(), Config(rate, 42));
    EXPECT_GE(r.achieved_cer, previous) << "rate " << rate;
    previous = r.achieved_cer;
  }
}

TEST(InjectProperty, EntryProportionsFollowFrequencies) {
  const ErrorModel m = Model({Entry(ErrorKind::kSubstitute, "a", "x", 0.5),
                              Entry(ErrorKind::kSubstitute, "b", "y", 0.3),
                              Entry(ErrorKind::kSubstitute, "c", "z", 0.2)});
  std::mt19937_64 rng(9);
  std::u32string s(100000, U'a');
  std::uniform_int_distribution<int> pick(0, 2);
  for (auto& c : s) c = U"abc"[pick(rng)];
  const EditPlan plan = PlanEditsUnits(s, m, Config(10, 5));
  ASSERT_EQ(plan.edits.size(), 10000u);
  std::map<std::string, double> share;
  for (const PlannedEdit& e : plan.edits) share[*e.entry.source] += 1.0 / 10000.0;
  EXPECT_NEAR(share["a"], 0.5, 0.02);
  EXPECT_NEAR(share["b"], 0.3, 0.02);
  EXPECT_NEAR(share["c"], 0.2, 0.02);
}

// ---- sweep

TEST(Sweep, StemNames) {
  EXPECT_EQ(SweepStem(2, KindSet::Of(ErrorKind::kSubstitute)), "rate02_sub");
  EXPECT_EQ(SweepStem(20, KindSet::All()), "rate20_all");
  EXPECT_EQ(SweepStem(2.5, KindSet::Parse("ins+del")), "rate2.5_ins+del");
}

std::vector<std::string> Corpus() {
  std::vector<std::string> lines;
  for (std::uint64_t i = 0; i < 40; ++i) lines.push_back(RandomText(i, 120));
  return lines;
}

std::string Join(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

TEST(Sweep, RateZeroIsIdentity) {
  TempDir dir;
  SweepConfig c;
  c.rates = {0};
  c.kind_sets = {KindSet::All()};
  RunSweep(Corpus(), Mixed(), c, dir.path());
  EXPECT_EQ(ReadFile(dir / "rate00_all.txt"), Join(Corpus()));
}

TEST(Sweep, GridFileCountAndSidecar) {
  TempDir dir;
  SweepConfig c;
  for (int r = 0; r <= 20; r += 2) c.rates.push_back(r);
  c.kind_sets = {KindSet::Parse("sub"), KindSet::Parse("ins"), KindSet::Parse("del"),
                 KindSet::All()};
  c.mt_export = true;
  const auto cells = RunSweep(Corpus(), Mixed(), c, dir.path());
  EXPECT_EQ(cells.size(), 44u);
  std::size_t texts = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir.path())) {
    if (entry.path().extension() == ".txt") ++texts;
  }
  EXPECT_EQ(texts, 44u);
  EXPECT_TRUE(std::filesystem::exists(dir / "mt/rate10_all.noisy"));
  EXPECT_EQ(ReadFile(dir / "mt/rate10_all.orig"), Join(Corpus()));

  const auto meta = nlohmann::json::parse(ReadFile(dir / "rate10_all.metrics.json"));
  EXPECT_EQ(meta.at("rate_enforced"), "per_text");
  EXPECT_EQ(meta.at("texts"), 40);
  EXPECT_NEAR(meta.at("corpus_micro_cer").get<double>(), 10.0, 0.5);
}

TEST(Sweep, DeterministicAcrossParallelism) {
  TempDir a, b;
  SweepConfig c;
  c.rates = {0, 5, 10, 20};
  c.kind_sets = {KindSet::All(), KindSet::Parse("sub")};
  c.seed = 77;
  c.parallelism = 1;
  RunSweep(Corpus(), Mixed(), c, a.path());
  c.parallelism = 8;
  RunSweep(Corpus(), Mixed(), c, b.path());
  std::size_t compared = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(a.path())) {
    if (!entry.is_regular_file()) continue;
    const auto rel = std::filesystem::relative(entry.path(), a.path());
    EXPECT_EQ(ReadFile(entry.path()), ReadFile(b.path() / rel)) << rel;
    ++compared;
  }
  EXPECT_EQ(compared, 16u);
}

TEST(Sweep, UnreachableTextIsKeptAndCounted) {
  TempDir dir;
  SweepConfig c;
  c.rates = {20};
  c.kind_sets = {KindSet::Parse("sub")};
  std::string rich;
  while (rich.size() < 200) rich += "eel loan neon ";
  const std::vector<std::string> corpus = {"zzzz zzzz", rich};
  const auto cells = RunSweep(corpus, Mixed(), c, dir.path());
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].failed_texts, 1u);
  const std::string out = ReadFile(dir / "rate20_sub.txt");
  EXPECT_EQ(out.substr(0, out.find('\n')), "zzzz zzzz");
}

}  // namespace
}  // namespace ocrkit
