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

#include "ocrkit/textmetrics.h"

#include "ocrkit/parallel.h"
#include "ocrkit/status.h"

namespace ocrkit {

OpCounts& OpCounts::operator+=(const OpCounts& o) {
  matches += o.matches;
  substitutions += o.substitutions;
  insertions += o.insertions;
  deletions += o.deletions;
  return *this;
}

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "match";
    case EditKind::kSubstitute: return "substitute";
    case EditKind::kInsert: return "insert";
    case EditKind::kDelete: return "delete";
  }
  return "?";
}

UnitSeq Normalize(std::string_view text, const NormalizationPolicy& policy) {
  std::u32string cps = DecodeUtf8(text);
  if (policy.form == NormalizationPolicy::Form::kNfc) cps = NfcNormalize(cps);

  if (policy.whitespace == NormalizationPolicy::Whitespace::kCollapseRuns) {
    std::u32string collapsed;
    collapsed.reserve(cps.size());
    bool in_run = false;
    for (const char32_t c : cps) {
      if (IsUnicodeWhitespace(c)) {
        if (!in_run) collapsed.push_back(U' ');
        in_run = true;
      } else {
        collapsed.push_back(c);
        in_run = false;
      }
    }
    cps = std::move(collapsed);
  }

  if (policy.unit == NormalizationPolicy::UnitKind::kCodePoint) return cps;

  UnitSeq units;
  for (const std::u32string& cluster : SplitGraphemes(cps)) {
    units.push_back(InternCluster(cluster));
  }
  return units;
}

CerReport ComputeCerUnits(std::u32string_view ref, std::u32string_view hyp) {
  if (ref.empty()) {
    throw Error(ErrorCode::kEmptyReference,
                "reference is empty after normalization; CER undefined");
  }
  const Alignment alignment = Align(ref, hyp);
  CerReport report;
  report.distance = alignment.distance;
  report.ref_len = ref.size();
  report.cer = 100.0 * static_cast<double>(report.distance) /
               static_cast<double>(report.ref_len);
  report.counts = CountOps(alignment);
  return report;
}

CerReport ComputeCer(std::string_view ref, std::string_view hyp,
                     const NormalizationPolicy& policy) {
  return ComputeCerUnits(Normalize(ref, policy), Normalize(hyp, policy));
}

CorpusCer ComputeCorpusCer(const std::vector<TextPair>& pairs,
                           const NormalizationPolicy& policy,
                           int parallelism) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no (reference, hypothesis) pairs");
  }
  CorpusCer out;
  out.per_article.resize(pairs.size());
  ParallelFor(pairs.size(), parallelism, [&](std::size_t i) {
    try {
      out.per_article[i] = {pairs[i].id,
                            ComputeCer(pairs[i].ref, pairs[i].hyp, policy)};
    } catch (const Error& e) {
      throw Error(e.code(), "article '" + pairs[i].id + "': " + e.what());
    }
  });
  double cer_sum = 0.0;
  for (const ArticleCer& a : out.per_article) {
    out.total_distance += a.report.distance;
    out.total_ref_len += a.report.ref_len;
    cer_sum += a.report.cer;
  }
  out.micro_cer = 100.0 * static_cast<double>(out.total_distance) /
                  static_cast<double>(out.total_ref_len);
  out.macro_cer = cer_sum / static_cast<double>(pairs.size());
  return out;
}

}  // namespace ocrkit
