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
#include <string>
#include <vector>

#include "ocrkit/corpus.h"
#include "ocrkit/engines.h"
#include "ocrkit/report.h"
#include "ocrkit/textmetrics.h"

namespace ocrkit {

struct EvaluationConfig {
  int parallelism = 1;  // max in-flight recognitions
  NormalizationPolicy policy;
  std::string dataset;  // overrides the manifest label when set
};

struct ArticleEvaluation {
  std::string language;
  std::string article_id;
  std::string hypothesis_text;
  CerReport report;
  std::int64_t latency_ms = 0;
};

struct EvaluationResult {
  std::vector<ArticleEvaluation> articles;  // manifest order
  // Per language: total distance over total reference length, in percent.
  std::vector<LanguageReport> languages;
};

// Runs the engine on every manifest image and scores it against the
// reference. Throws kEmptyCorpus on an empty manifest and kInvalidArgument
// for an entry without an image; engine and metric errors propagate.
EvaluationResult Evaluate(const Manifest& manifest, EngineAdapter& engine,
                          const EvaluationConfig& config = {});

std::string ArticlesToCsv(const std::vector<ArticleEvaluation>& articles);

}  // namespace ocrkit
