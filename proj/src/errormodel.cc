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

#include "ocrkit/errormodel.h"

#include <algorithm>
#include <map>
#include <tuple>

#include <json.hpp>

#include "ocrkit/corpus.h"
#include "ocrkit/parallel.h"
#include "ocrkit/status.h"

namespace ocrkit {
namespace {

using nlohmann::json;

// Kind plus source/target units; absent sides are 0.
using Key = std::tuple<ErrorKind, Unit, Unit>;
using Counts = std::map<Key, std::uint64_t>;

void Renormalize(ErrorModel* model) {
  std::uint64_t kept = 0;
  for (const ErrorEntry& e : model->entries) kept += e.count;
  for (ErrorEntry& e : model->entries) {
    e.freq = kept == 0 ? 0.0
                       : static_cast<double>(e.count) / static_cast<double>(kept);
  }
}

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInsert: return "insert";
    case ErrorKind::kDelete: return "delete";
    case ErrorKind::kSubstitute: return "substitute";
  }
  return "?";
}

std::optional<ErrorKind> ParseErrorKind(std::string_view name) {
  if (name == "insert" || name == "ins") return ErrorKind::kInsert;
  if (name == "delete" || name == "del") return ErrorKind::kDelete;
  if (name == "substitute" || name == "sub") return ErrorKind::kSubstitute;
  return std::nullopt;
}

KindSet KindSet::Parse(std::string_view text) {
  if (text == "all") return All();
  KindSet set;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(",+", start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(start, end - start);
    const auto kind = ParseErrorKind(token);
    if (!kind) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown error kind '" + std::string(token) +
                      "' (expected ins, del, sub or all)");
    }
    set = set.with(*kind);
    start = end + 1;
  }
  return set;
}

std::string KindSet::label() const {
  if (*this == All()) return "all";
  std::string out;
  const std::pair<ErrorKind, const char*> names[] = {
      {ErrorKind::kInsert, "ins"},
      {ErrorKind::kDelete, "del"},
      {ErrorKind::kSubstitute, "sub"}};
  for (const auto& [kind, name] : names) {
    if (!contains(kind)) continue;
    if (!out.empty()) out.push_back('+');
    out += name;
  }
  return out.empty() ? "none" : out;
}

bool EntryRankLess(const ErrorEntry& a, const ErrorEntry& b) {
  if (a.count != b.count) return a.count > b.count;
  return std::tie(a.kind, a.source, a.target) <
         std::tie(b.kind, b.source, b.target);
}

ErrorModel MineErrorModel(const std::vector<TextPair>& pairs,
                          std::string language,
                          const NormalizationPolicy& policy, int parallelism) {
  std::vector<Counts> per_pair(pairs.size());
  ParallelFor(pairs.size(), parallelism, [&](std::size_t i) {
    const UnitSeq ref = Normalize(pairs[i].ref, policy);
    if (ref.empty()) {
      throw Error(ErrorCode::kEmptyReference,
                  "article '" + pairs[i].id + "': reference is empty");
    }
    const UnitSeq hyp = Normalize(pairs[i].hyp, policy);
    Counts& counts = per_pair[i];
    for (const EditOp& op : Align(ref, hyp).ops) {
      switch (op.kind) {
        case EditKind::kMatch:
          break;
        case EditKind::kSubstitute:
          ++counts[{ErrorKind::kSubstitute, *op.ref_char, *op.hyp_char}];
          break;
        case EditKind::kDelete:
          ++counts[{ErrorKind::kDelete, *op.ref_char, 0}];
          break;
        case EditKind::kInsert:
          ++counts[{ErrorKind::kInsert, 0, *op.hyp_char}];
          break;
      }
    }
  });

  Counts merged;
  for (const Counts& c : per_pair) {
    for (const auto& [key, n] : c) merged[key] += n;
  }

  ErrorModel model;
  model.language = std::move(language);
  for (const auto& [key, n] : merged) {
    const auto& [kind, src, tgt] = key;
    ErrorEntry e;
    e.kind = kind;
    if (kind != ErrorKind::kInsert) e.source = UnitToUtf8(src);
    if (kind != ErrorKind::kDelete) e.target = UnitToUtf8(tgt);
    e.count = n;
    model.total_error_count += n;
    model.entries.push_back(std::move(e));
  }
  std::sort(model.entries.begin(), model.entries.end(), EntryRankLess);
  Renormalize(&model);
  return model;
}

ErrorModel TopK(const ErrorModel& model, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "top-k needs k >= 1");
  ErrorModel out = model;
  std::sort(out.entries.begin(), out.entries.end(), EntryRankLess);
  if (out.entries.size() > k) out.entries.resize(k);
  Renormalize(&out);
  return out;
}

ErrorModel FilterKinds(const ErrorModel& model, KindSet kinds) {
  if (kinds.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "kind set must not be empty");
  }
  ErrorModel out;
  out.language = model.language;
  out.total_error_count = model.total_error_count;
  for (const ErrorEntry& e : model.entries) {
    if (kinds.contains(e.kind)) out.entries.push_back(e);
  }
  if (out.entries.empty()) {
    throw Error(ErrorCode::kEmptyModel,
                "no error entries of kinds '" + kinds.label() + "'");
  }
  Renormalize(&out);
  return out;
}

std::string ErrorModelToJson(const ErrorModel& model) {
  json entries = json::array();
  for (const ErrorEntry& e : model.entries) {
    json j = json::object();
    j["kind"] = ErrorKindName(e.kind);
    j["source"] = e.source ? json(*e.source) : json(nullptr);
    j["target"] = e.target ? json(*e.target) : json(nullptr);
    j["count"] = e.count;
    j["freq"] = e.freq;
    entries.push_back(std::move(j));
  }
  json root = json::object();
  root["language"] = model.language;
  root["total_error_count"] = model.total_error_count;
  root["entries"] = std::move(entries);
  return root.dump(2, ' ', /*ensure_ascii=*/true) + "\n";
}

ErrorModel ErrorModelFromJson(std::string_view text) {
  ErrorModel model;
  try {
    const json root = json::parse(text);
    model.language = root.value("language", std::string());
    model.total_error_count = root.at("total_error_count").get<std::uint64_t>();
    for (const json& j : root.at("entries")) {
      ErrorEntry e;
      const auto kind = ParseErrorKind(j.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::kManifestParse, "bad error kind");
      e.kind = *kind;
      if (j.contains("source") && !j["source"].is_null()) {
        e.source = j["source"].get<std::string>();
      }
      if (j.contains("target") && !j["target"].is_null()) {
        e.target = j["target"].get<std::string>();
      }
      const bool ok =
          (e.kind == ErrorKind::kInsert && !e.source && e.target) ||
          (e.kind == ErrorKind::kDelete && e.source && !e.target) ||
          (e.kind == ErrorKind::kSubstitute && e.source && e.target &&
           *e.source != *e.target);
      if (!ok) {
        throw Error(ErrorCode::kManifestParse,
                    "error entry fields do not match its kind");
      }
      e.count = j.at("count").get<std::uint64_t>();
      e.freq = j.at("freq").get<double>();
      model.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kManifestParse,
                std::string("malformed error model: ") + e.what());
  }
  return model;
}

void SaveErrorModel(const ErrorModel& model, const std::filesystem::path& path) {
  WriteFile(path, ErrorModelToJson(model));
}

ErrorModel LoadErrorModel(const std::filesystem::path& path) {
  return ErrorModelFromJson(ReadFile(path));
}

}  // namespace ocrkit
