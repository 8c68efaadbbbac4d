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

#include <json.hpp>
#include <random>
#include <system_error>

#include "ocrkit/corpus.h"
#include "ocrkit/engines.h"
#include "ocrkit/status.h"

namespace fs = std::filesystem;

namespace ocrkit {

TranscriptCache::TranscriptCache(fs::path dir) : dir_(std::move(dir)) {}

std::string TranscriptCache::Key(std::string_view engine,
                                 std::string_view image_sha256,
                                 std::string_view language) {
  std::string material;
  material.append(engine).push_back('\0');
  material.append(image_sha256).push_back('\0');
  material.append(language);
  return Sha256Hex(material);
}

fs::path TranscriptCache::PathFor(const std::string& key) const {
  return dir_ / key.substr(0, 2) / (key + ".json");
}

std::optional<OcrResult> TranscriptCache::Get(const std::string& key) const {
  const fs::path path = PathFor(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ReadFile(path));
    OcrResult r;
    r.engine = doc.at("engine").get<std::string>();
    r.language = doc.at("lang").get<std::string>();
    r.hypothesis_text = doc.at("text").get<std::string>();
    r.latency_ms = doc.value("latency_ms", std::int64_t{0});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo,
                "corrupt cache entry " + path.string() + ": " + e.what());
  }
}

void TranscriptCache::Put(const std::string& key, const OcrResult& result,
                          std::string_view image_sha256) {
  const fs::path path = PathFor(key);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create " +
                                    path.parent_path().string() + ": " +
                                    ec.message());
  }
  nlohmann::json doc = {{"engine", result.engine},
                        {"lang", result.language},
                        {"image_sha256", std::string(image_sha256)},
                        {"text", result.hypothesis_text},
                        {"latency_ms", result.latency_ms}};
  thread_local std::mt19937_64 salt{std::random_device{}()};
  const fs::path tmp =
      path.parent_path() / (key + ".tmp" + std::to_string(salt()));
  WriteFile(tmp, doc.dump(2) + "\n");
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }
}

CachingEngine::CachingEngine(std::shared_ptr<EngineAdapter> inner,
                             TranscriptCache cache, CacheMode mode,
                             std::string engine_name)
    : inner_(std::move(inner)), cache_(std::move(cache)), mode_(mode) {
  if (!inner_ && mode_ != CacheMode::kReplay) {
    throw Error(ErrorCode::kInvalidArgument,
                "only replay mode works without an engine");
  }
  name_ = !engine_name.empty() ? engine_name : inner_ ? inner_->name() : "";
  if (name_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cached engine needs a name");
  }
}

EngineKind CachingEngine::kind() const {
  return inner_ ? inner_->kind() : EngineKind::kMock;
}

std::set<std::string> CachingEngine::supported_languages() const {
  return inner_ ? inner_->supported_languages() : MappedLanguages("mock");
}

std::string CachingEngine::RecognizeText(const std::string& image_ref,
                                         const std::string& language) {
  std::string digest;
  try {
    digest = Sha256Hex(ReadFile(image_ref));
  } catch (const Error& e) {
    throw Error(ErrorCode::kEngineUnavailable, e.what());
  }
  const std::string key = TranscriptCache::Key(name_, digest, language);
  if (mode_ != CacheMode::kRecord) {
    if (auto hit = cache_.Get(key)) {
      ++hits_;
      return hit->hypothesis_text;
    }
  }
  ++misses_;
  if (mode_ == CacheMode::kReplay) {
    throw Error(ErrorCode::kEngineUnavailable,
                "no cached transcript for " + image_ref + " (" + language +
                    ") in replay mode");
  }
  OcrResult fresh = inner_->Recognize(image_ref, language);
  fresh.engine = name_;
  cache_.Put(key, fresh, digest);
  return fresh.hypothesis_text;
}

}  // namespace ocrkit
