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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/textmetrics.h"

namespace ocrkit {

// Declaration order is the tie-break order used when sorting entries.
enum class ErrorKind : std::uint8_t { kInsert, kDelete, kSubstitute };

std::string_view ErrorKindName(ErrorKind kind);  // insert/delete/substitute
std::optional<ErrorKind> ParseErrorKind(std::string_view name);

class KindSet {
 public:
  constexpr KindSet() = default;
  static constexpr KindSet All() { return KindSet(0b111); }
  static constexpr KindSet Of(ErrorKind k) {
    return KindSet(static_cast<std::uint8_t>(1u << static_cast<unsigned>(k)));
  }

  // Accepts "all" or a comma/plus separated list of ins/del/sub (or the
  // full kind names).
  static KindSet Parse(std::string_view text);

  constexpr bool contains(ErrorKind k) const {
    return bits_ & (1u << static_cast<unsigned>(k));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr KindSet with(ErrorKind k) const {
    return KindSet(static_cast<std::uint8_t>(bits_ | Of(k).bits_));
  }
  constexpr std::uint8_t bits() const { return bits_; }

  // "all", or a '+'-joined list in ins, del, sub order.
  std::string label() const;

  bool operator==(const KindSet&) const = default;

 private:
  constexpr explicit KindSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

struct ErrorEntry {
  ErrorKind kind = ErrorKind::kSubstitute;
  std::optional<std::string> source;  // UTF-8 unit; delete and substitute
  std::optional<std::string> target;  // UTF-8 unit; insert and substitute
  std::uint64_t count = 0;
  double freq = 0.0;

  bool operator==(const ErrorEntry&) const = default;
};

// Strict weak order: count descending, then (kind, source, target) in
// code-point order (UTF-8 byte order coincides with it).
bool EntryRankLess(const ErrorEntry& a, const ErrorEntry& b);

struct ErrorModel {
  std::string language;
  std::vector<ErrorEntry> entries;
  std::uint64_t total_error_count = 0;

  bool operator==(const ErrorModel&) const = default;
};

// Single-unit insertions, deletions and substitutions counted from the
// deterministic alignments of every pair.
ErrorModel MineErrorModel(const std::vector<TextPair>& pairs,
                          std::string language = {},
                          const NormalizationPolicy& policy = {},
                          int parallelism = 1);

// Keeps the first k entries and renormalizes their frequencies. The total
// error count is left untouched for provenance.
ErrorModel TopK(const ErrorModel& model, std::size_t k);

// Throws kEmptyModel when nothing of the requested kinds remains.
ErrorModel FilterKinds(const ErrorModel& model, KindSet kinds);

// JSON with every non-ASCII character written as a \u escape.
std::string ErrorModelToJson(const ErrorModel& model);
ErrorModel ErrorModelFromJson(std::string_view text);
void SaveErrorModel(const ErrorModel& model, const std::filesystem::path& path);
ErrorModel LoadErrorModel(const std::filesystem::path& path);

}  // namespace ocrkit
