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

#include <httplib.h>
#include <stdlib.h>

#include <random>
#include <thread>

#include "ocrkit/corpus.h"
#include "ocrkit/engines.h"
#include "ocrkit/evaluate.h"
#include "ocrkit/status.h"
#include "ocrkit/textmetrics.h"
#include "ocrkit/unicode.h"
#include "test_util.h"

namespace ocrkit {
namespace {

using testing::TempDir;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

std::string RandomText(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  const std::u32string alpha = U"abcdefghijklmnopqrstuvwxyz     ";
  std::u32string s(n, U' ');
  for (auto& c : s) c = alpha[rng() % alpha.size()];
  return EncodeUtf8(s);
}

ErrorModel NoiseModel() {
  ErrorModel m;
  m.entries = {{ErrorKind::kSubstitute, "e", "c", 3, 0.3},
               {ErrorKind::kDelete, " ", std::nullopt, 3, 0.3},
               {ErrorKind::kInsert, std::nullopt, "i", 2, 0.2},
               {ErrorKind::kSubstitute, "o", "0", 2, 0.2}};
  m.total_error_count = 10;
  return m;
}

// Writes page image stand-ins (any bytes) plus transcript sidecars.
Manifest MakePages(const TempDir& dir, int count, const std::string& lang = "hin") {
  Manifest m;
  m.dataset_label = "synthetic";
  for (int i = 0; i < count; ++i) {
    const std::string id = lang + "/" + std::to_string(i);
    const std::filesystem::path image = dir / (lang + std::to_string(i) + ".png");
    const std::string text = RandomText(static_cast<std::uint64_t>(i) + 1, 600);
    WriteFile(image, "page-" + id);
    WriteFile(image.string() + ".gt.txt", text);
    m.entries.push_back({lang, id, text, image.string(), std::nullopt});
  }
  return m;
}

TEST(LanguageCodes, Tables) {
  EXPECT_EQ(MapLanguageCode("hin", "tesseract"), "hin");
  EXPECT_EQ(MapLanguageCode("npi", "tesseract"), "nep");
  EXPECT_EQ(MapLanguageCode("zho", "tesseract"), "chi_sim");
  EXPECT_EQ(MapLanguageCode("wol", "tesseract"), "script/Latin");
  EXPECT_EQ(MapLanguageCode("hin", "http"), "hi");
  EXPECT_EQ(MapLanguageCode("khm", "mock"), "khm");
  for (const char* engine : {"tesseract", "http", "mock"}) {
    EXPECT_EQ(MapLanguageCode("eng", engine), "eng");
  }
}

TEST(LanguageCodes, UnknownListsNearest) {
  try {
    MapLanguageCode("zzz", "tesseract");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownMapping);
    EXPECT_NE(std::string(e.what()).find("nearest"), std::string::npos);
  }
  EXPECT_EQ(CodeOf([] { MapLanguageCode("hin", "abbyy"); }), ErrorCode::kUnknownMapping);
}

TEST(LanguageCodes, EveryBenchmarkLanguageMapped) {
  EXPECT_EQ(MappedLanguages("tesseract").size(), 61u);
  EXPECT_TRUE(MappedLanguages("nope").empty());
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(MockEngine, IdentityReturnsTranscript) {
  TempDir dir;
  const Manifest m = MakePages(dir, 1);
  MockEngine engine(MockEngineConfig{});
  const OcrResult r = engine.Recognize(*m.entries[0].image_ref, "hin", "hin/0");
  EXPECT_EQ(r.hypothesis_text, m.entries[0].reference_text);
  EXPECT_EQ(r.engine, "mock");
  EXPECT_EQ(r.article_id, "hin/0");
  EXPECT_GE(r.latency_ms, 0);
}

TEST(MockEngine, EmptyTranscriptIsValid) {
  TempDir dir;
  WriteFile(dir / "p.png", "x");
  WriteFile(dir / "p.png.gt.txt", "");
  MockEngine engine(MockEngineConfig{});
  EXPECT_EQ(engine.Recognize((dir / "p.png").string(), "hin").hypothesis_text, "");
}

TEST(MockEngine, NoisyAtTenPercent) {
  TempDir dir;
  const Manifest m = MakePages(dir, 3);
  MockEngineConfig c;
  c.noise_model = NoiseModel();
  c.noise_cer = 10;
  c.seed = 5;
  MockEngine engine(c);
  for (const ArticlePair& p : m.entries) {
    const OcrResult r = engine.Recognize(*p.image_ref, p.language);
    EXPECT_NEAR(ComputeCer(p.reference_text, r.hypothesis_text).cer, 10.0, 0.5);
    EXPECT_EQ(r.hypothesis_text, engine.Recognize(*p.image_ref, p.language).hypothesis_text);
  }
}

TEST(MockEngine, UnsupportedLanguageAndMissingImage) {
  MockEngineConfig c;
  c.languages = {"hin"};
  MockEngine engine(c);
  EXPECT_EQ(CodeOf([&] { engine.Recognize("x.png", "tam"); }),
            ErrorCode::kUnsupportedLanguage);
  EXPECT_EQ(CodeOf([&] { engine.Recognize("/nonexistent/x.png", "hin"); }),
            ErrorCode::kEngineUnavailable);
}

TEST(CommandEngine, MissingBinary) {
  CommandEngineConfig c;
  c.argv = {"ocrkit-no-such-binary-xyz", "{image}"};
  CommandEngine engine(c);
  EXPECT_EQ(CodeOf([&] { engine.Recognize("x.png", "hin"); }),
            ErrorCode::kEngineUnavailable);
}

TEST(CommandEngine, ReadsStdoutVerbatim) {
  CommandEngineConfig c;
  c.argv = {"printf", "%s|%s", "{image}", "{lang}"};
  CommandEngine engine(c);
  EXPECT_EQ(engine.Recognize("page 1.png", "npi").hypothesis_text, "page 1.png|nep");
}

TEST(CommandEngine, OptionsAppended) {
  CommandEngineConfig c;
  c.argv = {"echo", "-n", "{lang}"};
  c.options = {{"--psm", "6"}};
  CommandEngine engine(c);
  EXPECT_EQ(engine.Recognize("x", "hin").hypothesis_text, "hin --psm 6");
}

TEST(CommandEngine, FailureCarriesStderr) {
  CommandEngineConfig c;
  c.argv = {"sh", "-c", "echo broken model >&2; exit 4"};
  CommandEngine engine(c);
  try {
    engine.Recognize("x", "hin");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEngineUnavailable);
    EXPECT_NE(std::string(e.what()).find("broken model"), std::string::npos);
  }
}

TEST(CommandEngine, Timeout) {
  CommandEngineConfig c;
  c.argv = {"sleep", "5"};
  c.timeout = std::chrono::milliseconds(100);
  CommandEngine engine(c);
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(CodeOf([&] { engine.Recognize("x", "hin"); }), ErrorCode::kTimeout);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(3));
}

class HttpFixture : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/ocr", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      if (failures_left_ > 0) {
        --failures_left_;
        res.status = 503;
        return;
      }
      auth_ = req.get_header_value("Authorization");
      const std::string lang = req.get_param_value("lang");
      res.set_content("{\"result\":{\"text\":\"" + lang + ":" + std::to_string(req.body.size()) +
                          "\"}}",
                      "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    WriteFile(dir_ / "p.png", "12345");
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
  }

  HttpEngineConfig Config() {
    HttpEngineConfig c;
    c.url = "http://127.0.0.1:" + std::to_string(port_) + "/ocr";
    c.json_path = "/result/text";
    c.initial_backoff = std::chrono::milliseconds(1);
    c.timeout = std::chrono::milliseconds(2000);
    return c;
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  std::atomic<int> failures_left_{0};
  std::string auth_;
  TempDir dir_;
};

TEST_F(HttpFixture, ParsesJsonPointer) {
  HttpEngine engine(Config());
  EXPECT_EQ(engine.Recognize((dir_ / "p.png").string(), "hin").hypothesis_text, "hi:5");
}

TEST_F(HttpFixture, CredentialsFromEnvironment) {
  HttpEngineConfig c = Config();
  c.api_key_env = "OCRKIT_TEST_KEY";
  HttpEngine engine(c);
  unsetenv("OCRKIT_TEST_KEY");
  EXPECT_EQ(CodeOf([&] { engine.Recognize((dir_ / "p.png").string(), "hin"); }),
            ErrorCode::kEngineUnavailable);
  setenv("OCRKIT_TEST_KEY", "s3cret", 1);
  engine.Recognize((dir_ / "p.png").string(), "hin");
  EXPECT_EQ(auth_, "Bearer s3cret");
  unsetenv("OCRKIT_TEST_KEY");
}

TEST_F(HttpFixture, RetriesServerErrors) {
  failures_left_ = 2;
  HttpEngine engine(Config());
  EXPECT_EQ(engine.Recognize((dir_ / "p.png").string(), "hin").hypothesis_text, "hi:5");
  EXPECT_EQ(engine.attempts_made(), 3);
}

TEST_F(HttpFixture, GivesUpAfterThreeAttempts) {
  failures_left_ = 100;
  HttpEngine engine(Config());
  EXPECT_EQ(CodeOf([&] { engine.Recognize((dir_ / "p.png").string(), "hin"); }),
            ErrorCode::kEngineUnavailable);
  EXPECT_EQ(requests_.load(), 3);
}

TEST_F(HttpFixture, MissingField) {
  HttpEngineConfig c = Config();
  c.json_path = "/nope";
  HttpEngine engine(c);
  EXPECT_EQ(CodeOf([&] { engine.Recognize((dir_ / "p.png").string(), "hin"); }),
            ErrorCode::kEngineUnavailable);
}

TEST(HttpEngine, UnreachableServer) {
  TempDir dir;
  WriteFile(dir / "p.png", "x");
  HttpEngineConfig c;
  c.url = "http://127.0.0.1:1/ocr";
  c.initial_backoff = std::chrono::milliseconds(1);
  HttpEngine engine(c);
  const ErrorCode code = CodeOf([&] { engine.Recognize((dir / "p.png").string(), "hin"); });
  EXPECT_TRUE(code == ErrorCode::kEngineUnavailable || code == ErrorCode::kTimeout);
  EXPECT_THROW(HttpEngine(HttpEngineConfig{}), Error);
}

TEST(TranscriptCache, PutGet) {
  TempDir dir;
  TranscriptCache cache(dir.path());
  const std::string key = TranscriptCache::Key("mock", Sha256Hex("img"), "hin");
  EXPECT_FALSE(cache.Get(key));
  cache.Put(key, {"mock", "hin", "", "नमस्ते\n", 7}, Sha256Hex("img"));
  const auto hit = cache.Get(key);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->hypothesis_text, "नमस्ते\n");
  EXPECT_TRUE(std::filesystem::exists(dir / key.substr(0, 2) / (key + ".json")));
  EXPECT_NE(key, TranscriptCache::Key("mock", Sha256Hex("img"), "tam"));
}

TEST(TranscriptCache, ConcurrentReadersAndWriters) {
  TempDir dir;
  TranscriptCache cache(dir.path());
  const std::string key = TranscriptCache::Key("e", "h", "hin");
  const std::string text(20000, 'x');
  std::vector<std::jthread> threads;
  std::atomic<int> bad{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 50; ++i) {
        cache.Put(key, {"e", "hin", "", text, 0}, "h");
        if (auto hit = cache.Get(key); hit && hit->hypothesis_text != text) ++bad;
      }
    });
  }
  threads.clear();
  EXPECT_EQ(bad.load(), 0);
}

TEST(CachingEngine, RecordThenReplayOffline) {
  TempDir dir;
  const Manifest m = MakePages(dir, 4);
  MockEngineConfig c;
  c.noise_model = NoiseModel();
  c.noise_cer = 10;
  auto inner = std::make_shared<MockEngine>(c);
  CachingEngine recorder(inner, TranscriptCache(dir / "cache"), CacheMode::kRecord);
  std::vector<std::string> recorded;
  for (const ArticlePair& p : m.entries) {
    recorded.push_back(recorder.Recognize(*p.image_ref, p.language).hypothesis_text);
  }
  EXPECT_EQ(inner->calls(), 4);

  CachingEngine replay(nullptr, TranscriptCache(dir / "cache"), CacheMode::kReplay, "mock");
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    EXPECT_EQ(replay.Recognize(*m.entries[i].image_ref, "hin").hypothesis_text, recorded[i]);
  }
  EXPECT_EQ(replay.hits(), 4);
  EXPECT_EQ(CodeOf([&] { replay.Recognize(*m.entries[0].image_ref, "tam"); }),
            ErrorCode::kEngineUnavailable);
}

TEST(CachingEngine, ReadWriteServesHits) {
  TempDir dir;
  const Manifest m = MakePages(dir, 2);
  auto inner = std::make_shared<MockEngine>(MockEngineConfig{});
  CachingEngine engine(inner, TranscriptCache(dir / "cache"), CacheMode::kReadWrite);
  for (int round = 0; round < 3; ++round) {
    for (const ArticlePair& p : m.entries) engine.Recognize(*p.image_ref, p.language);
  }
  EXPECT_EQ(inner->calls(), 2);
  EXPECT_EQ(engine.hits(), 4);
  EXPECT_THROW(CachingEngine(nullptr, TranscriptCache(dir.path()), CacheMode::kRecord), Error);
}

TEST(Evaluate, PerLanguageMicroCer) {
  TempDir dir;
  Manifest m = MakePages(dir, 3, "hin");
  const Manifest tam = MakePages(dir, 2, "tam");
  m.entries.insert(m.entries.end(), tam.entries.begin(), tam.entries.end());
  MockEngine engine(MockEngineConfig{});
  const EvaluationResult r = Evaluate(m, engine);
  ASSERT_EQ(r.languages.size(), 2u);
  EXPECT_EQ(r.languages[0].language, "hin");
  EXPECT_EQ(r.languages[0].dataset, "synthetic");
  EXPECT_EQ(r.languages[0].group, ScriptGroup::kNorthIndic);
  EXPECT_DOUBLE_EQ(r.languages[1].cer, 0.0);
  EXPECT_EQ(r.languages[1].cls, AccuracyClass::kGood);
  EXPECT_EQ(r.articles.size(), 5u);
}

TEST(Evaluate, BoundedConcurrency) {
  TempDir dir;
  const Manifest m = MakePages(dir, 16);
  MockEngineConfig c;
  c.delay = std::chrono::milliseconds(15);
  MockEngine engine(c);
  EvaluationConfig config;
  config.parallelism = 3;
  Evaluate(m, engine, config);
  EXPECT_LE(engine.max_in_flight(), 3);
  EXPECT_GE(engine.max_in_flight(), 1);
  EXPECT_EQ(engine.calls(), 16);
}

TEST(Evaluate, Errors) {
  MockEngine engine(MockEngineConfig{});
  EXPECT_EQ(CodeOf([&] { Evaluate(Manifest{}, engine); }), ErrorCode::kEmptyCorpus);
  Manifest m;
  m.entries.push_back({"hin", "1", "abc", std::nullopt, std::nullopt});
  EXPECT_EQ(CodeOf([&] { Evaluate(m, engine); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace ocrkit
