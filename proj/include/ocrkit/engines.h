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

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/errormodel.h"

namespace ocrkit {

enum class EngineKind { kExternalCommand, kHttpService, kMock };

std::string_view EngineKindName(EngineKind kind);

struct OcrResult {
  std::string engine;
  std::string language;
  std::string article_id;
  std::string hypothesis_text;  // verbatim engine output; may be empty
  std::int64_t latency_ms = 0;
};

// Engine-specific language code for an ISO 639-3 code. Tables: "tesseract"
// (traineddata names, script models where no language model exists),
// "http" (BCP-47 style hints) and "mock" (identity). Throws kUnknownMapping
// naming the nearest known codes.
std::string MapLanguageCode(std::string_view iso, std::string_view engine);
std::set<std::string> MappedLanguages(std::string_view engine);

std::string Sha256Hex(std::string_view bytes);

class EngineAdapter {
 public:
  virtual ~EngineAdapter() = default;

  virtual std::string name() const = 0;
  virtual EngineKind kind() const = 0;
  virtual std::set<std::string> supported_languages() const = 0;

  // Checks the language, times the call and wraps the text. Throws
  // kUnsupportedLanguage, kEngineUnavailable or kTimeout.
  OcrResult Recognize(const std::string& image_ref, const std::string& language,
                      const std::string& article_id = {});

 protected:
  virtual std::string RecognizeText(const std::string& image_ref,
                                    const std::string& language) = 0;
};

// Free-form engine options; appended as argv pairs (command) or query
// parameters (HTTP).
using EngineOptions = std::map<std::string, std::string>;

struct MockEngineConfig {
  std::string name = "mock";
  std::set<std::string> languages;  // empty: every benchmark language
  // Transcript sidecar read for image X: X + transcript_suffix.
  std::string transcript_suffix = ".gt.txt";
  // Optional noise: the transcript is passed through Inject with a seed
  // derived from `seed` and the image content hash.
  std::optional<ErrorModel> noise_model;
  double noise_cer = 0.0;
  KindSet noise_kinds = KindSet::All();
  std::uint64_t seed = 0;
  std::chrono::milliseconds delay{0};
};

class MockEngine : public EngineAdapter {
 public:
  explicit MockEngine(MockEngineConfig config);

  std::string name() const override { return config_.name; }
  EngineKind kind() const override { return EngineKind::kMock; }
  std::set<std::string> supported_languages() const override;

  int max_in_flight() const { return max_in_flight_.load(); }
  int calls() const { return calls_.load(); }

 protected:
  std::string RecognizeText(const std::string& image_ref,
                            const std::string& language) override;

 private:
  MockEngineConfig config_;
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
  std::atomic<int> calls_{0};
};

struct CommandEngineConfig {
  std::string name = "tesseract";
  // argv template; "{image}" and "{lang}" are substituted per call.
  std::vector<std::string> argv = {"tesseract", "{image}", "stdout", "-l",
                                   "{lang}"};
  std::string language_table = "tesseract";
  std::set<std::string> languages;  // empty: every mapped language
  EngineOptions options;
  std::chrono::milliseconds timeout{120000};
};

// Spawns the configured binary per call and reads its stdout as UTF-8.
class CommandEngine : public EngineAdapter {
 public:
  explicit CommandEngine(CommandEngineConfig config);

  std::string name() const override { return config_.name; }
  EngineKind kind() const override { return EngineKind::kExternalCommand; }
  std::set<std::string> supported_languages() const override;

 protected:
  std::string RecognizeText(const std::string& image_ref,
                            const std::string& language) override;

 private:
  CommandEngineConfig config_;
};

struct HttpEngineConfig {
  std::string name = "http";
  std::string url;        // scheme://host[:port]/path
  std::string json_path = "/text";  // JSON pointer to the text field
  // Credentials come only from the environment: the key is read from
  // api_key_env at call time and sent as "<auth_header>: <prefix><key>".
  std::string api_key_env;
  std::string auth_header = "Authorization";
  std::string auth_prefix = "Bearer ";
  std::string content_type = "application/octet-stream";
  std::string language_table = "http";
  std::set<std::string> languages;
  EngineOptions options;
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds min_interval{0};  // rate limit between requests
  std::chrono::milliseconds timeout{60000};
};

// POSTs image bytes (language and options as query parameters) and reads
// the text field from the JSON response. Connection failures, 429 and 5xx
// are retried with exponential backoff up to max_attempts.
class HttpEngine : public EngineAdapter {
 public:
  explicit HttpEngine(HttpEngineConfig config);

  std::string name() const override { return config_.name; }
  EngineKind kind() const override { return EngineKind::kHttpService; }
  std::set<std::string> supported_languages() const override;

  int attempts_made() const { return attempts_.load(); }

 protected:
  std::string RecognizeText(const std::string& image_ref,
                            const std::string& language) override;

 private:
  HttpEngineConfig config_;
  std::mutex rate_mu_;
  std::chrono::steady_clock::time_point last_request_{};
  std::atomic<int> attempts_{0};
};

// Content-addressed transcript store. Entries live under
// <dir>/<key[0:2]>/<key>.json with key = sha256(engine, image hash,
// language); writes go through a temporary file and an atomic rename, so
// concurrent readers and writers never see partial entries.
class TranscriptCache {
 public:
  explicit TranscriptCache(std::filesystem::path dir);

  static std::string Key(std::string_view engine, std::string_view image_sha256,
                         std::string_view language);

  std::optional<OcrResult> Get(const std::string& key) const;
  void Put(const std::string& key, const OcrResult& result,
           std::string_view image_sha256);

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path PathFor(const std::string& key) const;
  std::filesystem::path dir_;
};

enum class CacheMode {
  kReadWrite,  // serve hits, record misses
  kReplay,     // serve hits only; a miss is kEngineUnavailable
  kRecord,     // always call the engine and overwrite
};

// Record/replay wrapper. In replay mode `inner` may be null; the engine
// name then comes from `engine_name`.
class CachingEngine : public EngineAdapter {
 public:
  CachingEngine(std::shared_ptr<EngineAdapter> inner, TranscriptCache cache,
                CacheMode mode, std::string engine_name = {});

  std::string name() const override { return name_; }
  EngineKind kind() const override;
  std::set<std::string> supported_languages() const override;

  int hits() const { return hits_.load(); }
  int misses() const { return misses_.load(); }

 protected:
  std::string RecognizeText(const std::string& image_ref,
                            const std::string& language) override;

 private:
  std::shared_ptr<EngineAdapter> inner_;
  TranscriptCache cache_;
  CacheMode mode_;
  std::string name_;
  std::atomic<int> hits_{0};
  std::atomic<int> misses_{0};
};

}  // namespace ocrkit
