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

#include "ocrkit/engines.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <thread>

#include "ocrkit/corpus.h"
#include "ocrkit/inject.h"
#include "ocrkit/languages.h"
#include "ocrkit/random.h"
#include "ocrkit/status.h"
#include "ocrkit/textmetrics.h"
#include "ocrkit/unicode.h"

namespace ocrkit {
namespace {

struct CodeRow {
  std::string_view iso;
  std::string_view tesseract;
  std::string_view http;
};

// Languages without a dedicated Tesseract model use its per-script model.
constexpr std::array<CodeRow, 61> kCodeTable = {{
    {"amh", "amh", "am"},           {"ara", "ara", "ar"},
    {"ast", "script/Latin", "ast"}, {"bel", "bel", "be"},
    {"ben", "ben", "bn"},           {"bul", "bul", "bg"},
    {"ceb", "ceb", "ceb"},          {"ckb", "script/Arabic", "ckb"},
    {"ell", "ell", "el"},           {"eng", "eng", "eng"},
    {"ful", "script/Latin", "ff"},  {"guj", "guj", "gu"},
    {"heb", "heb", "he"},           {"hin", "hin", "hi"},
    {"hye", "hye", "hy"},           {"isl", "isl", "is"},
    {"jpn", "jpn", "ja"},           {"kan", "kan", "kn"},
    {"kat", "kat", "ka"},           {"kaz", "kaz", "kk"},
    {"khm", "khm", "km"},           {"kir", "kir", "ky"},
    {"kor", "kor", "ko"},           {"lao", "lao", "lo"},
    {"lin", "script/Latin", "ln"},  {"lug", "script/Latin", "lg"},
    {"mal", "mal", "ml"},           {"mar", "mar", "mr"},
    {"mkd", "mkd", "mk"},           {"mon", "mon", "mn"},
    {"mri", "mri", "mi"},           {"mya", "mya", "my"},
    {"npi", "nep", "ne"},           {"nya", "script/Latin", "ny"},
    {"orm", "script/Latin", "om"},  {"pan", "pan", "pa"},
    {"pol", "pol", "pl"},           {"por", "por", "pt"},
    {"pus", "pus", "ps"},           {"ron", "ron", "ro"},
    {"rus", "rus", "ru"},           {"slk", "slk", "sk"},
    {"slv", "slv", "sl"},           {"sna", "script/Latin", "sn"},
    {"som", "script/Latin", "so"},  {"srp", "srp", "sr"},
    {"swe", "swe", "sv"},           {"swh", "swa", "sw"},
    {"tam", "tam", "ta"},           {"tel", "tel", "te"},
    {"tgk", "tgk", "tg"},           {"tha", "tha", "th"},
    {"tur", "tur", "tr"},           {"ukr", "ukr", "uk"},
    {"umb", "script/Latin", "umb"}, {"urd", "urd", "ur"},
    {"uzb", "uzb", "uz"},           {"vie", "vie", "vi"},
    {"wol", "script/Latin", "wo"},  {"zho", "chi_sim", "zh"},
    {"zul", "script/Latin", "zu"},
}};

std::string_view Column(const CodeRow& row, std::string_view engine) {
  if (engine == "tesseract") return row.tesseract;
  if (engine == "http") return row.http;
  return row.iso;
}

bool KnownTable(std::string_view engine) {
  return engine == "tesseract" || engine == "http" || engine == "mock";
}

}  // namespace

std::string_view EngineKindName(EngineKind kind) {
  switch (kind) {
    case EngineKind::kExternalCommand: return "external_command";
    case EngineKind::kHttpService: return "http_service";
    case EngineKind::kMock: return "mock";
  }
  return "?";
}

std::string MapLanguageCode(std::string_view iso, std::string_view engine) {
  if (!KnownTable(engine)) {
    throw Error(ErrorCode::kUnknownMapping,
                "no language table for engine '" + std::string(engine) +
                    "' (tables: tesseract, http, mock)");
  }
  for (const CodeRow& row : kCodeTable) {
    if (row.iso == iso) return std::string(Column(row, engine));
  }
  const std::u32string query = DecodeUtf8(iso);
  std::vector<std::pair<std::size_t, std::string_view>> ranked;
  for (const CodeRow& row : kCodeTable) {
    ranked.emplace_back(EditDistance(query, DecodeUtf8(row.iso)), row.iso);
  }
  std::sort(ranked.begin(), ranked.end());
  std::string nearest;
  for (std::size_t i = 0; i < 3 && i < ranked.size(); ++i) {
    if (i > 0) nearest += ", ";
    nearest += ranked[i].second;
  }
  throw Error(ErrorCode::kUnknownMapping,
              "no '" + std::string(engine) + "' code for language '" +
                  std::string(iso) + "'; nearest: " + nearest);
}

std::set<std::string> MappedLanguages(std::string_view engine) {
  std::set<std::string> out;
  if (!KnownTable(engine)) return out;
  for (const CodeRow& row : kCodeTable) out.emplace(row.iso);
  return out;
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                  nullptr)) {
    throw Error(ErrorCode::kInternal, "SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

OcrResult EngineAdapter::Recognize(const std::string& image_ref,
                                   const std::string& language,
                                   const std::string& article_id) {
  const std::set<std::string> langs = supported_languages();
  if (!langs.contains(language)) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "engine '" + name() + "' does not support language '" +
                    language + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  OcrResult result;
  result.hypothesis_text = RecognizeText(image_ref, language);
  result.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  result.engine = name();
  result.language = language;
  result.article_id = article_id;
  return result;
}

MockEngine::MockEngine(MockEngineConfig config) : config_(std::move(config)) {}

std::set<std::string> MockEngine::supported_languages() const {
  if (!config_.languages.empty()) return config_.languages;
  return MappedLanguages("mock");
}

std::string MockEngine::RecognizeText(const std::string& image_ref,
                                      const std::string& language) {
  (void)language;
  const int now = ++in_flight_;
  int seen = max_in_flight_.load();
  while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
  }
  ++calls_;
  struct Leave {
    std::atomic<int>& n;
    ~Leave() { --n; }
  } leave{in_flight_};

  if (config_.delay.count() > 0) std::this_thread::sleep_for(config_.delay);

  std::string image;
  std::string transcript;
  try {
    image = ReadFile(image_ref);
    transcript = ReadFile(image_ref + config_.transcript_suffix);
  } catch (const Error& e) {
    throw Error(ErrorCode::kEngineUnavailable,
                "mock engine cannot read input: " + std::string(e.what()));
  }
  if (!config_.noise_model || config_.noise_cer <= 0.0) return transcript;

  const std::string digest = Sha256Hex(image);
  InjectionConfig ic;
  ic.target_cer = config_.noise_cer;
  ic.kinds = config_.noise_kinds;
  ic.seed = DeriveSeed(config_.seed, {std::stoull(digest.substr(0, 16), nullptr, 16)});
  try {
    return Inject(transcript, *config_.noise_model, ic).noisy_text;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptyReference) return transcript;
    throw;
  }
}

}  // namespace ocrkit
