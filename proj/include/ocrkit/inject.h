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
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/errormodel.h"
#include "ocrkit/textmetrics.h"

namespace ocrkit {

struct InjectionConfig {
  double target_cer = 0.0;  // percent, within [0, 100]
  KindSet kinds = KindSet::All();
  std::uint64_t seed = 0;
  double tolerance = 0.5;  // percent
  NormalizationPolicy policy;
};

struct PlannedEdit {
  // Reference position for delete/substitute; gap index in [0, N] for
  // insert (gap g sits just before reference unit g).
  std::size_t index = 0;
  ErrorEntry entry;

  bool operator==(const PlannedEdit&) const = default;
};

struct EditPlan {
  std::vector<PlannedEdit> edits;  // ascending index; a gap precedes its unit
  std::size_t ref_len = 0;

  bool operator==(const EditPlan&) const = default;
};

struct InjectionResult {
  std::string noisy_text;
  double achieved_cer = 0.0;
  std::size_t distance = 0;  // measured edit distance to the original
  EditPlan plan;
  std::uint64_t seed = 0;
  bool off_target = false;  // |achieved - target| > tolerance
};

// round(target/100 * n)
std::size_t TargetEditCount(double target_cer, std::size_t ref_len);

// Samples E = TargetEditCount edits. Each draw picks an entry with
// probability proportional to its frequency, then a uniformly random
// remaining site: an occurrence of the source unit for delete/substitute,
// a gap for insert. Entries whose sites are exhausted are dropped from the
// draw. Positions and gaps are used at most once, and an insertion never
// touches an edited unit (nor the reverse), so planned edits cannot merge
// into a cheaper alignment. Throws kUnreachable when fewer than E sites
// can be placed, kEmptyModel when no entry of config.kinds remains.
EditPlan PlanEdits(std::string_view text, const ErrorModel& model,
                   const InjectionConfig& config);
EditPlan PlanEditsUnits(std::u32string_view units, const ErrorModel& model,
                        const InjectionConfig& config);

// Applies edits against original indices. Throws kInternal when the plan
// does not fit the text.
UnitSeq ApplyPlanUnits(std::u32string_view units, const EditPlan& plan);
std::string ApplyPlan(std::string_view text, const EditPlan& plan,
                      const NormalizationPolicy& policy = {});

InjectionResult Inject(std::string_view text, const ErrorModel& model,
                       const InjectionConfig& config);

struct SweepConfig {
  std::vector<double> rates;
  std::vector<KindSet> kind_sets;
  std::uint64_t seed = 0;
  int parallelism = 1;
  double tolerance = 0.5;
  bool mt_export = false;
  NormalizationPolicy policy;
};

struct SweepCell {
  double rate = 0.0;
  KindSet kinds;
  std::string stem;  // file name without extension
  double corpus_micro_cer = 0.0;
  std::size_t failed_texts = 0;
};

// "rate02_sub", "rate10_all", "rate2.5_ins+del"
std::string SweepStem(double rate, KindSet kinds);

// Writes <stem>.txt (one noisy text per line, input order) and
// <stem>.metrics.json per (rate, kind set); with mt_export also
// mt/<stem>.noisy and mt/<stem>.orig as parallel files. Per-text seeds are
// DeriveSeed(seed, {rate, kinds, index}), so output bytes do not depend on
// parallelism. Per-text failures are recorded in the sidecar and the
// original text is written in their place.
std::vector<SweepCell> RunSweep(const std::vector<std::string>& corpus,
                                const ErrorModel& model,
                                const SweepConfig& config,
                                const std::filesystem::path& out_dir);

}  // namespace ocrkit
