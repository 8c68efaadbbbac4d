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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/unicode.h"

namespace ocrkit {

struct NormalizationPolicy {
  enum class Form { kNfc, kNone };
  enum class UnitKind { kCodePoint, kGraphemeCluster };
  enum class Whitespace { kPreserve, kCollapseRuns };

  Form form = Form::kNfc;
  UnitKind unit = UnitKind::kCodePoint;
  Whitespace whitespace = Whitespace::kPreserve;

  bool operator==(const NormalizationPolicy&) const = default;
};

// Applies the policy: Unicode form first, then whitespace collapsing (each
// run of Unicode whitespace becomes one U+0020), then unit segmentation.
UnitSeq Normalize(std::string_view text, const NormalizationPolicy& policy = {});

enum class EditKind : std::uint8_t { kMatch, kSubstitute, kInsert, kDelete };

std::string_view EditKindName(EditKind kind);

struct EditOp {
  EditKind kind;
  std::optional<Unit> ref_char;
  std::optional<Unit> hyp_char;
  // Position in the reference; for inserts, the index of the next
  // reference unit (the gap the insertion lands in).
  std::size_t ref_index;

  bool operator==(const EditOp&) const = default;
};

struct Alignment {
  std::vector<EditOp> ops;
  std::size_t distance = 0;
};

struct OpCounts {
  std::size_t matches = 0;
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;

  std::size_t errors() const { return substitutions + insertions + deletions; }
  OpCounts& operator+=(const OpCounts& o);
  bool operator==(const OpCounts&) const = default;
};

struct CerReport {
  std::size_t distance = 0;
  std::size_t ref_len = 0;
  double cer = 0.0;  // percent; exceeds 100 when insertions dominate
  OpCounts counts;
};

// Above this many units on either side, `Align` switches to the
// divide-and-conquer linear-space path.
inline constexpr std::size_t kFullMatrixLimit = 4096;

// Levenshtein distance with unit costs, O(min(n, m)) memory.
std::size_t EditDistance(std::u32string_view ref, std::u32string_view hyp);

// Minimal-cost alignment. Backtrace ties prefer match, then substitute,
// then delete, then insert.
Alignment Align(std::u32string_view ref, std::u32string_view hyp);

// Exposed for testing: forces one of the two alignment paths.
Alignment AlignFullMatrix(std::u32string_view ref, std::u32string_view hyp);
Alignment AlignLinearSpace(std::u32string_view ref, std::u32string_view hyp);

// Rebuilds the hypothesis from the reference and an alignment trace.
UnitSeq ReplayAlignment(std::u32string_view ref, const Alignment& alignment);

OpCounts CountOps(const Alignment& alignment);

// Throws Error(kEmptyReference) when the normalized reference is empty.
CerReport ComputeCer(std::string_view ref, std::string_view hyp,
                     const NormalizationPolicy& policy = {});
CerReport ComputeCerUnits(std::u32string_view ref, std::u32string_view hyp);

struct TextPair {
  std::string id;
  std::string ref;
  std::string hyp;
};

struct ArticleCer {
  std::string id;
  CerReport report;
};

struct CorpusCer {
  double micro_cer = 0.0;
  double macro_cer = 0.0;
  std::size_t total_distance = 0;
  std::size_t total_ref_len = 0;
  std::vector<ArticleCer> per_article;  // input order
};

// micro = 100 * sum(distance) / sum(ref_len); macro = mean of article CERs.
// Throws kEmptyCorpus for no pairs, kEmptyReference naming the article.
CorpusCer ComputeCorpusCer(const std::vector<TextPair>& pairs,
                           const NormalizationPolicy& policy = {},
                           int parallelism = 1);

}  // namespace ocrkit
