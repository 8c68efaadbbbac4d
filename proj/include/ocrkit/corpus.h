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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ocrkit {

// One evaluation unit: a ground-truth article with its page image and,
// optionally, an OCR hypothesis. Texts are stored as read (not normalized).
struct ArticlePair {
  std::string language;
  std::string article_id;
  std::string reference_text;
  std::optional<std::string> image_ref;
  std::optional<std::string> hypothesis_text;

  bool operator==(const ArticlePair&) const = default;
};

struct Manifest {
  std::vector<ArticlePair> entries;  // sorted by (language, article_id)
  std::string dataset_label;
};

// Reads a JSON Lines manifest. Each non-blank line is an object with
//   lang, id                     required strings
//   ref_text | ref_path          reference (inline text wins)
//   hyp_text | hyp_path          optional hypothesis (inline text wins)
//   image_path                   optional
//   dataset                      optional; first non-empty one labels the set
// Relative paths resolve against the manifest's directory; image paths are
// stored resolved. When no line names a dataset, the label is the file stem.
Manifest LoadManifest(const std::filesystem::path& path);

// Writes entries with inline texts so that LoadManifest(SaveManifest(m))
// reproduces m and a second save is byte-identical.
void SaveManifest(const Manifest& manifest, const std::filesystem::path& path);
std::string SerializeManifest(const Manifest& manifest);

struct ManifestWarning {
  std::string article_id;
  std::string code;  // "unknown-group", "empty-reference", "empty-hypothesis"
  std::string message;
};

std::vector<ManifestWarning> ValidateManifest(const Manifest& manifest);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace ocrkit
