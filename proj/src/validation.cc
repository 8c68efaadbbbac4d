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

#include "ocrkit/validation.h"

#include <cmath>
#include <map>
#include <unordered_map>

#include "ocrkit/csv.h"
#include "ocrkit/status.h"

namespace ocrkit {

std::vector<AnomalyFlag> FlagAnomalies(const std::vector<ArticleScore>& scores,
                                       const ValidationConfig& config) {
  if (!(config.sigma_multiplier > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma multiplier must be > 0");
  }
  const bool global = config.grouping == ValidationConfig::Grouping::kGlobal;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i].cer)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite CER for article '" + scores[i].article_id + "'");
    }
    groups[global ? std::string() : scores[i].language].push_back(i);
  }

  std::vector<AnomalyFlag> flags(scores.size());
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) {
      throw Error(ErrorCode::kGroupTooSmall,
                  "group '" + (global ? std::string("<global>") : key) +
                      "' has " + std::to_string(members.size()) +
                      " article(s); at least 2 are needed");
    }
    double sum = 0.0;
    for (const std::size_t i : members) sum += scores[i].cer;
    const double mean = sum / static_cast<double>(members.size());
    double sq = 0.0;
    for (const std::size_t i : members) {
      sq += (scores[i].cer - mean) * (scores[i].cer - mean);
    }
    const double stddev = std::sqrt(sq / static_cast<double>(members.size()));
    const double threshold = config.sigma_multiplier * stddev;
    for (const std::size_t i : members) {
      const double dev = scores[i].cer - mean;
      const bool flagged = config.side == ValidationConfig::Side::kTwoSided
                               ? std::abs(dev) > threshold
                               : dev > threshold;
      flags[i] = {scores[i].article_id, scores[i].language, scores[i].cer,
                  mean, stddev, flagged};
    }
  }
  return flags;
}

std::string AnomaliesToCsv(const std::vector<AnomalyFlag>& flags) {
  std::string out =
      CsvRow({"article_id", "language", "cer", "mean", "stddev", "flagged"});
  for (const AnomalyFlag& f : flags) {
    out += CsvRow({f.article_id, f.language, FormatFixed(f.cer, 4),
                   FormatFixed(f.mean, 4), FormatFixed(f.stddev, 4),
                   f.flagged ? "true" : "false"});
  }
  return out;
}

std::vector<AnomalyFlag> RevalidationRound(const Manifest& manifest,
                                           const HypothesisMap& hypotheses,
                                           const ValidationConfig& config,
                                           const NormalizationPolicy& policy) {
  std::unordered_map<std::string, const std::string*> by_id;
  for (const auto& [id, text] : hypotheses) by_id[id] = &text;

  std::vector<ArticleScore> scores;
  for (const ArticlePair& e : manifest.entries) {
    const std::string* hyp = nullptr;
    if (auto it = by_id.find(e.article_id); it != by_id.end()) {
      hyp = it->second;
    } else if (e.hypothesis_text) {
      hyp = &*e.hypothesis_text;
    }
    if (hyp == nullptr) continue;
    try {
      scores.push_back(
          {e.article_id, e.language, ComputeCer(e.reference_text, *hyp, policy).cer});
    } catch (const Error& err) {
      throw Error(err.code(), "article '" + e.article_id + "': " + err.what());
    }
  }
  std::vector<AnomalyFlag> flagged;
  for (AnomalyFlag& f : FlagAnomalies(scores, config)) {
    if (f.flagged) flagged.push_back(std::move(f));
  }
  return flagged;
}

std::vector<std::vector<AnomalyFlag>> RunRevalidation(
    const Manifest& manifest, HypothesisMap hypotheses,
    const std::function<HypothesisMap(const std::vector<AnomalyFlag>&,
                                      const HypothesisMap&)>& reannotate,
    const ValidationConfig& config, int max_rounds,
    const NormalizationPolicy& policy) {
  std::vector<std::vector<AnomalyFlag>> rounds;
  for (int round = 0; round < max_rounds; ++round) {
    rounds.push_back(RevalidationRound(manifest, hypotheses, config, policy));
    if (rounds.back().empty()) break;
    hypotheses = reannotate(rounds.back(), hypotheses);
  }
  return rounds;
}

}  // namespace ocrkit
