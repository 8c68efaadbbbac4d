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

#include "ocrkit/evaluate.h"

#include <map>

#include "ocrkit/csv.h"
#include "ocrkit/parallel.h"
#include "ocrkit/status.h"

namespace ocrkit {

EvaluationResult Evaluate(const Manifest& manifest, EngineAdapter& engine,
                          const EvaluationConfig& config) {
  if (manifest.entries.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "manifest has no entries");
  }
  if (config.parallelism < 1) {
    throw Error(ErrorCode::kInvalidArgument, "parallelism must be >= 1");
  }
  for (const ArticlePair& p : manifest.entries) {
    if (!p.image_ref) {
      throw Error(ErrorCode::kInvalidArgument,
                  "article '" + p.article_id + "' has no image_path");
    }
  }
  EvaluationResult result;
  result.articles.resize(manifest.entries.size());
  ParallelFor(manifest.entries.size(), config.parallelism, [&](std::size_t i) {
    const ArticlePair& p = manifest.entries[i];
    OcrResult ocr = engine.Recognize(*p.image_ref, p.language, p.article_id);
    ArticleEvaluation& a = result.articles[i];
    a.language = p.language;
    a.article_id = p.article_id;
    try {
      a.report = ComputeCer(p.reference_text, ocr.hypothesis_text, config.policy);
    } catch (const Error& e) {
      throw Error(e.code(), "article '" + p.article_id + "': " + e.what());
    }
    a.hypothesis_text = std::move(ocr.hypothesis_text);
    a.latency_ms = ocr.latency_ms;
  });

  std::map<std::string, std::pair<std::size_t, std::size_t>> totals;
  for (const ArticleEvaluation& a : result.articles) {
    totals[a.language].first += a.report.distance;
    totals[a.language].second += a.report.ref_len;
  }
  const std::string dataset =
      config.dataset.empty() ? manifest.dataset_label : config.dataset;
  for (const auto& [lang, t] : totals) {
    const double cer =
        100.0 * static_cast<double>(t.first) / static_cast<double>(t.second);
    result.languages.push_back(MakeLanguageReport(lang, dataset, engine.name(), cer));
  }
  return result;
}

std::string ArticlesToCsv(const std::vector<ArticleEvaluation>& articles) {
  std::string out = CsvRow({"language", "article_id", "ref_len", "distance", "cer"});
  for (const ArticleEvaluation& a : articles) {
    out += CsvRow({a.language, a.article_id, std::to_string(a.report.ref_len),
                   std::to_string(a.report.distance), FormatFixed(a.report.cer, 4)});
  }
  return out;
}

}  // namespace ocrkit
