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

#include "ocrkit/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ocrkit/languages.h"
#include "ocrkit/status.h"
#include "ocrkit/unicode.h"

namespace ocrkit {
namespace fs = std::filesystem;
using nlohmann::json;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write file: " + path.string());
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

namespace {

std::optional<std::string> OptionalString(const json& obj, const char* key,
                                          std::size_t line_no) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorCode::kManifestParse,
                "line " + std::to_string(line_no) + ": field '" + key +
                    "' must be a string");
  }
  return it->get<std::string>();
}

std::string ResolveText(const json& obj, const char* text_key,
                        const char* path_key, const fs::path& base,
                        std::size_t line_no, bool* present) {
  if (auto text = OptionalString(obj, text_key, line_no)) {
    *present = true;
    return *text;
  }
  if (auto rel = OptionalString(obj, path_key, line_no)) {
    *present = true;
    const fs::path p = fs::path(*rel).is_absolute() ? fs::path(*rel) : base / *rel;
    if (!fs::exists(p)) {
      throw Error(ErrorCode::kIo, "line " + std::to_string(line_no) +
                                      ": referenced file not found: " +
                                      p.string());
    }
    return ReadFile(p);
  }
  *present = false;
  return {};
}

}  // namespace

Manifest LoadManifest(const fs::path& path) {
  if (!fs::exists(path)) {
    throw Error(ErrorCode::kIo, "manifest not found: " + path.string());
  }
  const std::string contents = ReadFile(path);
  const fs::path base = path.parent_path();

  Manifest manifest;
  std::set<std::string> seen;
  std::istringstream lines(contents);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kManifestParse,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object()) {
      throw Error(ErrorCode::kManifestParse,
                  "line " + std::to_string(line_no) + ": expected an object");
    }
    ArticlePair entry;
    auto lang = OptionalString(obj, "lang", line_no);
    auto id = OptionalString(obj, "id", line_no);
    if (!lang || !id) {
      throw Error(ErrorCode::kManifestParse,
                  "line " + std::to_string(line_no) +
                      ": 'lang' and 'id' are required");
    }
    entry.language = *lang;
    entry.article_id = *id;
    if (!seen.insert(entry.article_id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate article id '" + entry.article_id + "' on line " +
                      std::to_string(line_no));
    }
    bool has_ref = false;
    entry.reference_text =
        ResolveText(obj, "ref_text", "ref_path", base, line_no, &has_ref);
    if (!has_ref) {
      throw Error(ErrorCode::kManifestParse,
                  "line " + std::to_string(line_no) +
                      ": one of 'ref_text' or 'ref_path' is required");
    }
    if (!IsValidUtf8(entry.reference_text)) {
      throw Error(ErrorCode::kInvalidUtf8,
                  "article '" + entry.article_id + "': reference is not UTF-8");
    }
    bool has_hyp = false;
    std::string hyp =
        ResolveText(obj, "hyp_text", "hyp_path", base, line_no, &has_hyp);
    if (has_hyp) {
      if (!IsValidUtf8(hyp)) {
        throw Error(ErrorCode::kInvalidUtf8,
                    "article '" + entry.article_id + "': hypothesis is not UTF-8");
      }
      entry.hypothesis_text = std::move(hyp);
    }
    if (auto image = OptionalString(obj, "image_path", line_no)) {
      const fs::path p = fs::path(*image);
      entry.image_ref = (p.is_absolute() ? p : base / p).lexically_normal().string();
    }
    if (auto ds = OptionalString(obj, "dataset", line_no);
        ds && !ds->empty() && manifest.dataset_label.empty()) {
      manifest.dataset_label = *ds;
    }
    manifest.entries.push_back(std::move(entry));
  }
  if (manifest.dataset_label.empty()) {
    manifest.dataset_label = path.stem().string();
  }
  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const ArticlePair& a, const ArticlePair& b) {
              return std::tie(a.language, a.article_id) <
                     std::tie(b.language, b.article_id);
            });
  return manifest;
}

std::string SerializeManifest(const Manifest& manifest) {
  std::string out;
  for (const ArticlePair& e : manifest.entries) {
    json obj = json::object();
    obj["lang"] = e.language;
    obj["id"] = e.article_id;
    obj["ref_text"] = e.reference_text;
    if (e.hypothesis_text) obj["hyp_text"] = *e.hypothesis_text;
    if (e.image_ref) obj["image_path"] = *e.image_ref;
    obj["dataset"] = manifest.dataset_label;
    out += obj.dump();
    out.push_back('\n');
  }
  return out;
}

void SaveManifest(const Manifest& manifest, const fs::path& path) {
  WriteFile(path, SerializeManifest(manifest));
}

std::vector<ManifestWarning> ValidateManifest(const Manifest& manifest) {
  std::vector<ManifestWarning> warnings;
  for (const ArticlePair& e : manifest.entries) {
    if (e.language.empty() || !FindLanguage(e.language)) {
      warnings.push_back({e.article_id, "unknown-group",
                          "language '" + e.language +
                              "' is not in the script-group table"});
    }
    if (e.reference_text.empty()) {
      warnings.push_back(
          {e.article_id, "empty-reference", "reference text is empty"});
    }
    if (e.hypothesis_text && e.hypothesis_text->empty()) {
      warnings.push_back(
          {e.article_id, "empty-hypothesis", "hypothesis text is empty"});
    }
  }
  return warnings;
}

}  // namespace ocrkit
