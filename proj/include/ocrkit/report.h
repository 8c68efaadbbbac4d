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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/languages.h"

namespace ocrkit {

// Accuracy bands over CER in percent: Good <= 2, Average in (2, 10],
// Poor > 10.
enum class AccuracyClass { kGood, kAverage, kPoor };

std::string_view AccuracyClassName(AccuracyClass cls);
std::optional<AccuracyClass> ParseAccuracyClass(std::string_view name);

inline constexpr double kGoodMaxCer = 2.0;
inline constexpr double kAverageMaxCer = 10.0;

// Throws kInvalidArgument for negative or non-finite input.
AccuracyClass Classify(double cer);

struct LanguageReport {
  std::string language;
  std::string script;               // empty when the language is unknown
  std::optional<ScriptGroup> group;
  std::string dataset;
  std::string engine;
  double cer = 0.0;  // percent
  AccuracyClass cls = AccuracyClass::kGood;

  bool operator==(const LanguageReport&) const = default;
};

// Fills script and group from the language table and the class from cer.
LanguageReport MakeLanguageReport(std::string language, std::string dataset,
                                  std::string engine, double cer);

struct BandSummary {
  std::string engine;
  std::string dataset;
  std::size_t languages = 0;
  std::size_t good = 0;
  std::size_t average = 0;
  std::size_t poor = 0;
  // Percentages and mean, rounded half-up to one decimal.
  double good_pct = 0.0;
  double average_pct = 0.0;
  double poor_pct = 0.0;
  double average_cer = 0.0;
  double mean_cer = 0.0;  // unrounded
};

// One summary per (engine, dataset), in order of first appearance. Throws
// kInvalidArgument on empty input.
std::vector<BandSummary> Summarize(const std::vector<LanguageReport>& reports);

struct GroupAverage {
  std::string engine;
  std::string dataset;
  ScriptGroup group;
  std::size_t languages = 0;
  double mean_cer = 0.0;  // unrounded
};

// Ordered by (engine, dataset) first appearance, then group. Throws
// kUnknownGroup naming the first report without a group.
std::vector<GroupAverage> GroupAverages(const std::vector<LanguageReport>& reports);

enum class ReportFormat { kCsv, kJson, kMarkdown };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);
// From the extension: .json, .md or anything else as csv.
ReportFormat FormatForPath(const std::filesystem::path& path);

// Rows sorted by (script, language name, language, engine, dataset). The
// markdown form pivots engines and datasets into columns and appends an
// "Average error" row.
std::vector<LanguageReport> SortedReports(std::vector<LanguageReport> reports);
std::string RenderReports(const std::vector<LanguageReport>& reports,
                          ReportFormat format);
void EmitReports(const std::vector<LanguageReport>& reports,
                 ReportFormat format, const std::filesystem::path& path);

std::string SummaryToCsv(const std::vector<BandSummary>& summaries);
std::string GroupAveragesToCsv(const std::vector<GroupAverage>& averages);

// Parses csv or json report text. The class column must agree with cer;
// a group column that names no known group is kUnknownGroup.
std::vector<LanguageReport> ParseReports(std::string_view text,
                                         ReportFormat format);
std::vector<LanguageReport> LoadReports(const std::filesystem::path& path);

}  // namespace ocrkit
