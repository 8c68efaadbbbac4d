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

#include <httplib.h>

#include <cstdlib>
#include <json.hpp>
#include <regex>
#include <thread>

#include "ocrkit/corpus.h"
#include "ocrkit/engines.h"
#include "ocrkit/status.h"
#include "ocrkit/unicode.h"

namespace ocrkit {
namespace {

struct UrlParts {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

UrlParts SplitUrl(const std::string& url) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, kUrl)) {
    throw Error(ErrorCode::kInvalidArgument, "bad engine URL: " + url);
  }
  return {m[1].str(), m[2].matched ? m[2].str() : "/"};
}

bool Retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

HttpEngine::HttpEngine(HttpEngineConfig config) : config_(std::move(config)) {
  SplitUrl(config_.url);
  try {
    nlohmann::json::json_pointer check(config_.json_path);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad JSON pointer: " + config_.json_path);
  }
  if (config_.max_attempts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_attempts must be >= 1");
  }
}

std::set<std::string> HttpEngine::supported_languages() const {
  if (!config_.languages.empty()) return config_.languages;
  return MappedLanguages(config_.language_table);
}

std::string HttpEngine::RecognizeText(const std::string& image_ref,
                                      const std::string& language) {
  const std::string code = MapLanguageCode(language, config_.language_table);
  const UrlParts url = SplitUrl(config_.url);
  std::string body;
  try {
    body = ReadFile(image_ref);
  } catch (const Error& e) {
    throw Error(ErrorCode::kEngineUnavailable, e.what());
  }

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw Error(ErrorCode::kEngineUnavailable,
                  "credential variable " + config_.api_key_env + " is not set");
    }
    headers.emplace(config_.auth_header, config_.auth_prefix + key);
  }
  httplib::Params params{{"lang", code}};
  for (const auto& [k, v] : config_.options) params.emplace(k, v);
  const std::string target =
      httplib::append_query_params(url.path, params);

  httplib::Client client(url.origin);
  const auto secs = config_.timeout.count() / 1000;
  const auto usecs = (config_.timeout.count() % 1000) * 1000;
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  std::chrono::milliseconds backoff = config_.initial_backoff;
  std::string last_error;
  bool last_was_timeout = false;
  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    if (config_.min_interval.count() > 0) {
      std::lock_guard lock(rate_mu_);
      const auto next = last_request_ + config_.min_interval;
      const auto now = std::chrono::steady_clock::now();
      if (now < next) std::this_thread::sleep_for(next - now);
      last_request_ = std::chrono::steady_clock::now();
    }
    ++attempts_;
    auto res = client.Post(target, headers, body, config_.content_type);
    if (!res) {
      last_was_timeout = res.error() == httplib::Error::Read ||
                         res.error() == httplib::Error::Write ||
                         res.error() == httplib::Error::ConnectionTimeout;
      last_error = httplib::to_string(res.error());
      continue;
    }
    last_was_timeout = false;
    if (Retryable(res->status)) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kEngineUnavailable,
                  config_.name + " returned HTTP " + std::to_string(res->status));
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorCode::kEngineUnavailable,
                  config_.name + " returned a non-JSON body");
    }
    const nlohmann::json::json_pointer ptr(config_.json_path);
    if (!doc.contains(ptr) || !doc.at(ptr).is_string()) {
      throw Error(ErrorCode::kEngineUnavailable,
                  config_.name + " response has no string at " + config_.json_path);
    }
    return doc.at(ptr).get<std::string>();
  }
  throw Error(last_was_timeout ? ErrorCode::kTimeout : ErrorCode::kEngineUnavailable,
              config_.name + " failed after " + std::to_string(config_.max_attempts) +
                  " attempts: " + last_error);
}

}  // namespace ocrkit
