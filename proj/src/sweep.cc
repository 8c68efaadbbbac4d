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

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "ocrkit/corpus.h"
#include "ocrkit/inject.h"
#include "ocrkit/parallel.h"
#include "ocrkit/random.h"
#include "ocrkit/status.h"

namespace ocrkit {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TextOutcome {
  std::string noisy;
  std::string status;  // ok, unreachable, empty, error
  std::string error;
  std::uint64_t seed = 0;
  std::size_t target_edits = 0;
  std::size_t distance = 0;
  std::size_t ref_len = 0;
  double achieved_cer = 0.0;
  bool off_target = false;
};

bool HasLineBreak(const std::optional<std::string>& s) {
  return s && s->find_first_of("\r\n") != std::string::npos;
}

}  // namespace

std::string SweepStem(double rate, KindSet kinds) {
  char buf[32];
  if (rate == std::floor(rate)) {
    std::snprintf(buf, sizeof(buf), "rate%02lld", static_cast<long long>(rate));
  } else {
    std::snprintf(buf, sizeof(buf), "rate%g", rate);
  }
  return std::string(buf) + "_" + kinds.label();
}

std::vector<SweepCell> RunSweep(const std::vector<std::string>& corpus,
                                const ErrorModel& model,
                                const SweepConfig& config,
                                const fs::path& out_dir) {
  for (const double r : config.rates) {
    if (!(r >= 0.0 && r <= 100.0)) {
      throw Error(ErrorCode::kInvalidArgument, "sweep rates must lie in [0, 100]");
    }
  }
  for (const KindSet k : config.kind_sets) {
    if (k.empty()) throw Error(ErrorCode::kInvalidArgument, "empty kind set");
  }

  // Output is line-oriented, so entries that would emit a line break
  // cannot be represented.
  ErrorModel usable = model;
  std::erase_if(usable.entries, [](const ErrorEntry& e) {
    return HasLineBreak(e.target);
  });

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create " + out_dir.string() + ": " +
                                    ec.message());
  }

  struct CellSpec {
    double rate;
    KindSet kinds;
  };
  std::vector<CellSpec> cells;
  for (const double r : config.rates) {
    for (const KindSet k : config.kind_sets) cells.push_back({r, k});
  }

  const std::size_t texts = corpus.size();
  std::vector<TextOutcome> outcomes(cells.size() * texts);
  ParallelFor(outcomes.size(), config.parallelism, [&](std::size_t task) {
    const CellSpec& cell = cells[task / texts];
    const std::size_t index = task % texts;
    TextOutcome& out = outcomes[task];
    InjectionConfig ic;
    ic.target_cer = cell.rate;
    ic.kinds = cell.kinds;
    ic.tolerance = config.tolerance;
    ic.policy = config.policy;
    ic.seed = DeriveSeed(
        config.seed, {static_cast<std::uint64_t>(std::llround(cell.rate * 1e6)),
                      cell.kinds.bits(), index});
    out.seed = ic.seed;
    const std::string& text = corpus[index];
    out.noisy = text;
    const UnitSeq units = Normalize(text, config.policy);
    out.ref_len = units.size();
    if (units.empty()) {
      out.status = "empty";
      return;
    }
    out.target_edits = TargetEditCount(cell.rate, units.size());
    try {
      const InjectionResult r = Inject(text, usable, ic);
      out.noisy = r.noisy_text;
      out.achieved_cer = r.achieved_cer;
      out.distance = r.distance;
      out.off_target = r.off_target;
      out.status = "ok";
    } catch (const Error& e) {
      out.status = e.code() == ErrorCode::kUnreachable ? "unreachable" : "error";
      out.error = e.what();
    }
  });

  if (config.mt_export) fs::create_directories(out_dir / "mt", ec);

  std::vector<SweepCell> summary;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    SweepCell sc;
    sc.rate = cells[c].rate;
    sc.kinds = cells[c].kinds;
    sc.stem = SweepStem(sc.rate, sc.kinds);

    std::string noisy_file, orig_file;
    std::size_t distance = 0, ref_len = 0;
    json per_text = json::array();
    for (std::size_t i = 0; i < texts; ++i) {
      const TextOutcome& o = outcomes[c * texts + i];
      noisy_file += o.noisy;
      noisy_file.push_back('\n');
      orig_file += corpus[i];
      orig_file.push_back('\n');
      if (o.status != "ok" && o.status != "empty") ++sc.failed_texts;
      if (o.status != "empty") {
        distance += o.distance;
        ref_len += o.ref_len;
      }
      json t = json::object();
      t["index"] = i;
      t["status"] = o.status;
      t["seed"] = o.seed;
      t["ref_units"] = o.ref_len;
      t["target_edits"] = o.target_edits;
      t["achieved_cer"] = o.achieved_cer;
      t["off_target"] = o.off_target;
      if (!o.error.empty()) t["error"] = o.error;
      per_text.push_back(std::move(t));
    }
    sc.corpus_micro_cer =
        ref_len == 0 ? 0.0
                     : 100.0 * static_cast<double>(distance) /
                           static_cast<double>(ref_len);

    json sidecar = json::object();
    sidecar["rate"] = sc.rate;
    sidecar["kinds"] = sc.kinds.label();
    sidecar["seed"] = config.seed;
    sidecar["rate_enforced"] = "per_text";
    sidecar["texts"] = texts;
    sidecar["failed_texts"] = sc.failed_texts;
    sidecar["corpus_ref_units"] = ref_len;
    sidecar["corpus_distance"] = distance;
    sidecar["corpus_micro_cer"] = sc.corpus_micro_cer;
    sidecar["per_text"] = std::move(per_text);

    WriteFile(out_dir / (sc.stem + ".txt"), noisy_file);
    WriteFile(out_dir / (sc.stem + ".metrics.json"), sidecar.dump(2) + "\n");
    if (config.mt_export) {
      WriteFile(out_dir / "mt" / (sc.stem + ".noisy"), noisy_file);
      WriteFile(out_dir / "mt" / (sc.stem + ".orig"), orig_file);
    }
    summary.push_back(std::move(sc));
  }
  return summary;
}

}  // namespace ocrkit
