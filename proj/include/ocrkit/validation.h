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

#include <functional>
#include <string>
#include <vector>

#include "ocrkit/corpus.h"
#include "ocrkit/textmetrics.h"

namespace ocrkit {

struct ValidationConfig {
  enum class Side { kTwoSided, kHighOnly };
  enum class Grouping { kPerLanguage, kGlobal };

  double sigma_multiplier = 2.0;
  Side side = Side::kTwoSided;
  Grouping grouping = Grouping::kPerLanguage;
};

struct ArticleScore {
  std::string article_id;
  std::string language;
  double cer = 0.0;
};

struct AnomalyFlag {
  std::string article_id;
  std::string language;
  double cer = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  bool flagged = false;
};

// One record per input, in input order. Group statistics use the population
// standard deviation. Throws kGroupTooSmall for a group under 2 articles and
// kInvalidArgument for a non-positive multiplier or non-finite CER.
std::vector<AnomalyFlag> FlagAnomalies(const std::vector<ArticleScore>& scores,
                                       const ValidationConfig& config = {});

// Columns: article_id, language, cer, mean, stddev, flagged.
std::string AnomaliesToCsv(const std::vector<AnomalyFlag>& flags);

// Hypotheses keyed by article id; entries without one fall back to the
// manifest's own hypothesis_text.
using HypothesisMap = std::vector<std::pair<std::string, std::string>>;

// Scores every manifest entry that has a hypothesis and returns only the
// flagged records for this round. Re-annotation happens outside; callers
// re-run with updated inputs until the result is empty.
std::vector<AnomalyFlag> RevalidationRound(
    const Manifest& manifest, const HypothesisMap& hypotheses,
    const ValidationConfig& config = {},
    const NormalizationPolicy& policy = {});

// Drives rounds: after each non-empty round `reannotate` returns updated
// hypotheses. Stops on an empty round or after max_rounds. Returns the
// flagged list of every round, the last one empty on convergence.
std::vector<std::vector<AnomalyFlag>> RunRevalidation(
    const Manifest& manifest, HypothesisMap hypotheses,
    const std::function<HypothesisMap(const std::vector<AnomalyFlag>&,
                                      const HypothesisMap&)>& reannotate,
    const ValidationConfig& config = {}, int max_rounds = 10,
    const NormalizationPolicy& policy = {});

}  // namespace ocrkit
