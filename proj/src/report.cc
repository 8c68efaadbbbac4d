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

#include "ocrkit/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <map>
#include <tuple>

#include "ocrkit/corpus.h"
#include "ocrkit/csv.h"
#include "ocrkit/status.h"

namespace ocrkit {
namespace {

constexpr std::string_view kColumns[] = {"language", "script", "group", "engine",
                                         "dataset",  "cer",    "class"};

std::string ShortestDouble(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error(ErrorCode::kInternal, "cannot format number");
  return std::string(buf, end);
}

double ParseDouble(std::string_view s, std::string_view what) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string LanguageName(const LanguageReport& r) {
  if (auto info = FindLanguage(r.language)) return std::string(info->name);
  return r.language;
}

using Key = std::pair<std::string, std::string>;

std::vector<Key> KeysInOrder(const std::vector<LanguageReport>& reports) {
  std::vector<Key> keys;
  for (const LanguageReport& r : reports) {
    Key k{r.engine, r.dataset};
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  return keys;
}

LanguageReport FromFields(std::string language, std::string script,
                          const std::string& group, std::string engine,
                          std::string dataset, double cer,
                          const std::string& cls_name) {
  LanguageReport r;
  r.language = std::move(language);
  r.script = std::move(script);
  if (!group.empty()) {
    r.group = ParseScriptGroup(group);
    if (!r.group) {
      throw Error(ErrorCode::kUnknownGroup, "unknown script group '" + group + "'");
    }
  }
  r.engine = std::move(engine);
  r.dataset = std::move(dataset);
  r.cer = cer;
  r.cls = Classify(cer);
  auto cls = ParseAccuracyClass(cls_name);
  if (!cls) {
    throw Error(ErrorCode::kInvalidArgument, "unknown class '" + cls_name + "'");
  }
  if (*cls != r.cls) {
    throw Error(ErrorCode::kInvalidArgument,
                "class " + cls_name + " disagrees with cer " + ShortestDouble(cer) +
                    " for " + r.language);
  }
  return r;
}

std::string RenderCsv(const std::vector<LanguageReport>& reports) {
  std::string out = CsvRow({kColumns, kColumns + 7});
  for (const LanguageReport& r : SortedReports(reports)) {
    out += CsvRow({r.language, r.script,
                   r.group ? std::string(ScriptGroupName(*r.group)) : "", r.engine,
                   r.dataset, ShortestDouble(r.cer),
                   std::string(AccuracyClassName(r.cls))});
  }
  return out;
}

std::string RenderJson(const std::vector<LanguageReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const LanguageReport& r : SortedReports(reports)) {
    nlohmann::ordered_json o;
    o["language"] = r.language;
    o["script"] = r.script;
    o["group"] = r.group ? nlohmann::ordered_json(std::string(ScriptGroupName(*r.group)))
                         : nlohmann::ordered_json(nullptr);
    o["engine"] = r.engine;
    o["dataset"] = r.dataset;
    o["cer"] = r.cer;
    o["class"] = std::string(AccuracyClassName(r.cls));
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string EscapeCell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string RenderMarkdown(const std::vector<LanguageReport>& reports) {
  const std::vector<Key> keys = KeysInOrder(reports);
  std::vector<Key> columns;
  // Datasets in first-appearance order, engines within each dataset likewise.
  std::vector<std::string> datasets;
  for (const Key& k : keys) {
    if (std::find(datasets.begin(), datasets.end(), k.second) == datasets.end()) {
      datasets.push_back(k.second);
    }
  }
  for (const std::string& d : datasets) {
    for (const Key& k : keys) {
      if (k.second == d) columns.push_back(k);
    }
  }

  std::string out = "| Language | Script | Group |";
  for (const Key& k : columns) out += " " + EscapeCell(k.second + " / " + k.first) + " |";
  out += "\n|---|---|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) out += "---:|";
  out += "\n";

  struct Row {
    std::string name, script, group;
    std::map<Key, double> cells;
  };
  std::vector<Row> rows;
  std::map<std::string, std::size_t> index;
  for (const LanguageReport& r : SortedReports(reports)) {
    auto [it, fresh] = index.emplace(r.language, rows.size());
    if (fresh) {
      rows.push_back({LanguageName(r), r.script,
                      r.group ? std::string(ScriptGroupName(*r.group)) : "", {}});
    }
    rows[it->second].cells[{r.engine, r.dataset}] = r.cer;
  }
  std::map<Key, std::pair<double, std::size_t>> sums;
  for (const Row& row : rows) {
    out += "| " + EscapeCell(row.name) + " | " + EscapeCell(row.script) + " | " +
           EscapeCell(row.group) + " |";
    for (const Key& k : columns) {
      auto it = row.cells.find(k);
      if (it == row.cells.end()) {
        out += " - |";
      } else {
        out += " " + FormatFixed(it->second, 1) + " |";
        sums[k].first += it->second;
        sums[k].second += 1;
      }
    }
    out += "\n";
  }
  if (!rows.empty()) {
    out += "| **Average error** | | |";
    for (const Key& k : columns) {
      const auto& [sum, n] = sums[k];
      out += " " + FormatFixed(sum / static_cast<double>(n), 1) + " |";
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string_view AccuracyClassName(AccuracyClass cls) {
  switch (cls) {
    case AccuracyClass::kGood: return "Good";
    case AccuracyClass::kAverage: return "Average";
    case AccuracyClass::kPoor: return "Poor";
  }
  return "?";
}

std::optional<AccuracyClass> ParseAccuracyClass(std::string_view name) {
  for (AccuracyClass c :
       {AccuracyClass::kGood, AccuracyClass::kAverage, AccuracyClass::kPoor}) {
    if (AccuracyClassName(c) == name) return c;
  }
  return std::nullopt;
}

AccuracyClass Classify(double cer) {
  if (!std::isfinite(cer) || cer < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "CER must be a finite percentage >= 0, got " + ShortestDouble(cer));
  }
  if (cer <= kGoodMaxCer) return AccuracyClass::kGood;
  if (cer <= kAverageMaxCer) return AccuracyClass::kAverage;
  return AccuracyClass::kPoor;
}

LanguageReport MakeLanguageReport(std::string language, std::string dataset,
                                  std::string engine, double cer) {
  LanguageReport r;
  if (auto info = FindLanguage(language)) {
    r.script = std::string(info->script);
    r.group = info->group;
  }
  r.language = std::move(language);
  r.dataset = std::move(dataset);
  r.engine = std::move(engine);
  r.cer = cer;
  r.cls = Classify(cer);
  return r;
}

std::vector<BandSummary> Summarize(const std::vector<LanguageReport>& reports) {
  if (reports.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to summarize");
  }
  std::vector<BandSummary> out;
  for (const Key& k : KeysInOrder(reports)) {
    BandSummary s;
    s.engine = k.first;
    s.dataset = k.second;
    double sum = 0.0;
    for (const LanguageReport& r : reports) {
      if (r.engine != k.first || r.dataset != k.second) continue;
      ++s.languages;
      sum += r.cer;
      switch (Classify(r.cer)) {
        case AccuracyClass::kGood: ++s.good; break;
        case AccuracyClass::kAverage: ++s.average; break;
        case AccuracyClass::kPoor: ++s.poor; break;
      }
    }
    const double n = static_cast<double>(s.languages);
    s.good_pct = RoundHalfUp(100.0 * static_cast<double>(s.good) / n, 1);
    s.average_pct = RoundHalfUp(100.0 * static_cast<double>(s.average) / n, 1);
    s.poor_pct = RoundHalfUp(100.0 * static_cast<double>(s.poor) / n, 1);
    s.mean_cer = sum / n;
    s.average_cer = RoundHalfUp(s.mean_cer, 1);
    out.push_back(s);
  }
  return out;
}

std::vector<GroupAverage> GroupAverages(const std::vector<LanguageReport>& reports) {
  for (const LanguageReport& r : reports) {
    if (!r.group) {
      throw Error(ErrorCode::kUnknownGroup,
                  "language '" + r.language + "' has no script group");
    }
  }
  std::vector<GroupAverage> out;
  for (const Key& k : KeysInOrder(reports)) {
    std::map<ScriptGroup, std::pair<double, std::size_t>> acc;
    for (const LanguageReport& r : reports) {
      if (r.engine != k.first || r.dataset != k.second) continue;
      acc[*r.group].first += r.cer;
      acc[*r.group].second += 1;
    }
    for (const auto& [g, sn] : acc) {
      out.push_back({k.first, k.second, g, sn.second,
                     sn.first / static_cast<double>(sn.second)});
    }
  }
  return out;
}

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

ReportFormat FormatForPath(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".json") return ReportFormat::kJson;
  if (ext == ".md") return ReportFormat::kMarkdown;
  return ReportFormat::kCsv;
}

std::vector<LanguageReport> SortedReports(std::vector<LanguageReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const LanguageReport& a, const LanguageReport& b) {
                     return std::make_tuple(a.script, LanguageName(a), a.language,
                                            a.engine, a.dataset) <
                            std::make_tuple(b.script, LanguageName(b), b.language,
                                            b.engine, b.dataset);
                   });
  return reports;
}

std::string RenderReports(const std::vector<LanguageReport>& reports,
                          ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: return RenderCsv(reports);
    case ReportFormat::kJson: return RenderJson(reports);
    case ReportFormat::kMarkdown: return RenderMarkdown(reports);
  }
  return {};
}

void EmitReports(const std::vector<LanguageReport>& reports, ReportFormat format,
                 const std::filesystem::path& path) {
  WriteFile(path, RenderReports(reports, format));
}

std::string SummaryToCsv(const std::vector<BandSummary>& summaries) {
  std::string out = CsvRow({"engine", "dataset", "languages", "good_pct",
                            "average_pct", "poor_pct", "average_cer"});
  for (const BandSummary& s : summaries) {
    out += CsvRow({s.engine, s.dataset, std::to_string(s.languages),
                   FormatFixed(s.good_pct, 1), FormatFixed(s.average_pct, 1),
                   FormatFixed(s.poor_pct, 1), FormatFixed(s.average_cer, 1)});
  }
  return out;
}

std::string GroupAveragesToCsv(const std::vector<GroupAverage>& averages) {
  std::string out = CsvRow({"engine", "dataset", "group", "languages", "mean_cer"});
  for (const GroupAverage& g : averages) {
    out += CsvRow({g.engine, g.dataset, std::string(ScriptGroupName(g.group)),
                   std::to_string(g.languages), FormatFixed(g.mean_cer, 1)});
  }
  return out;
}

std::vector<LanguageReport> ParseReports(std::string_view text, ReportFormat format) {
  std::vector<LanguageReport> out;
  if (format == ReportFormat::kJson) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
      for (const auto& o : doc) {
        const auto& g = o.at("group");
        out.push_back(FromFields(
            o.at("language").get<std::string>(), o.value("script", std::string()),
            g.is_null() ? std::string() : g.get<std::string>(),
            o.at("engine").get<std::string>(), o.at("dataset").get<std::string>(),
            o.at("cer").get<double>(), o.at("class").get<std::string>()));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kInvalidArgument, std::string("bad report JSON: ") + e.what());
    }
    return out;
  }
  if (format != ReportFormat::kCsv) {
    throw Error(ErrorCode::kInvalidArgument, "markdown reports cannot be loaded");
  }
  const auto rows = ParseCsv(text);
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "report CSV has no header");
  std::vector<std::size_t> col(7);
  for (std::size_t c = 0; c < 7; ++c) {
    auto it = std::find(rows[0].begin(), rows[0].end(), kColumns[c]);
    if (it == rows[0].end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "report CSV lacks column '" + std::string(kColumns[c]) + "'");
    }
    col[c] = static_cast<std::size_t>(it - rows[0].begin());
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != rows[0].size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "report CSV row " + std::to_string(i) + " has " +
                      std::to_string(row.size()) + " fields");
    }
    out.push_back(FromFields(row[col[0]], row[col[1]], row[col[2]], row[col[3]],
                             row[col[4]], ParseDouble(row[col[5]], "cer"),
                             row[col[6]]));
  }
  return out;
}

std::vector<LanguageReport> LoadReports(const std::filesystem::path& path) {
  return ParseReports(ReadFile(path), FormatForPath(path));
}

}  // namespace ocrkit
