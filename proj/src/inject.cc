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

#include "ocrkit/inject.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ocrkit/random.h"
#include "ocrkit/status.h"

namespace ocrkit {
namespace {

// Candidate sites still worth drawing from. Sites found ineligible are
// discarded for good: blocking only grows as edits are placed.
struct SitePool {
  std::vector<std::size_t> sites;
  bool exhausted = false;
};

struct Candidate {
  const ErrorEntry* entry;
  Unit source = 0;
  Unit target = 0;
  SitePool* pool = nullptr;
  bool active = true;
};

class SiteState {
 public:
  explicit SiteState(std::size_t n) : pos_used_(n, false), gap_used_(n + 1, false) {}

  bool PositionFree(std::size_t p) const {
    return !pos_used_[p] && !gap_used_[p] && !gap_used_[p + 1];
  }
  bool GapFree(std::size_t g) const {
    return !gap_used_[g] && (g == 0 || !pos_used_[g - 1]) &&
           (g == pos_used_.size() || !pos_used_[g]);
  }
  void TakePosition(std::size_t p) { pos_used_[p] = true; }
  void TakeGap(std::size_t g) { gap_used_[g] = true; }

 private:
  std::vector<bool> pos_used_;
  std::vector<bool> gap_used_;
};

}  // namespace

std::size_t TargetEditCount(double target_cer, std::size_t ref_len) {
  return static_cast<std::size_t>(
      std::llround(target_cer / 100.0 * static_cast<double>(ref_len)));
}

EditPlan PlanEditsUnits(std::u32string_view units, const ErrorModel& model,
                        const InjectionConfig& config) {
  if (!std::isfinite(config.target_cer) || config.target_cer < 0.0 ||
      config.target_cer > 100.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "target CER must be within [0, 100] percent");
  }
  const std::size_t n = units.size();
  if (n == 0) {
    throw Error(ErrorCode::kEmptyReference,
                "text is empty after normalization");
  }
  EditPlan plan;
  plan.ref_len = n;
  const std::size_t wanted = TargetEditCount(config.target_cer, n);
  if (wanted == 0) return plan;
  const ErrorModel restricted = FilterKinds(model, config.kinds);

  std::unordered_map<Unit, SitePool> by_source;
  SitePool gaps;
  std::vector<Candidate> candidates;
  for (const ErrorEntry& e : restricted.entries) {
    Candidate c{&e};
    if (e.kind != ErrorKind::kInsert &&
        !(e.source && ParseSingleUnit(*e.source, &c.source))) {
      continue;
    }
    if (e.kind != ErrorKind::kDelete &&
        !(e.target && ParseSingleUnit(*e.target, &c.target))) {
      continue;
    }
    if (e.freq <= 0.0) continue;
    if (e.kind == ErrorKind::kInsert) {
      c.pool = &gaps;
    } else {
      c.pool = &by_source[c.source];
    }
    candidates.push_back(c);
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (auto it = by_source.find(units[p]); it != by_source.end()) {
      it->second.sites.push_back(p);
    }
  }
  const bool any_insert = std::any_of(
      candidates.begin(), candidates.end(),
      [&](const Candidate& c) { return c.pool == &gaps; });
  if (any_insert) {
    gaps.sites.resize(n + 1);
    for (std::size_t g = 0; g <= n; ++g) gaps.sites[g] = g;
  }

  std::size_t capacity = any_insert ? n + 1 : 0;
  for (const auto& [unit, pool] : by_source) capacity += pool.sites.size();
  if (capacity < wanted) {
    throw Error(ErrorCode::kUnreachable,
                "need " + std::to_string(wanted) + " edits but only " +
                    std::to_string(capacity) +
                    " eligible sites exist (max achievable edit count " +
                    std::to_string(capacity) + ")");
  }

  Rng rng(config.seed);
  SiteState state(n);
  while (plan.edits.size() < wanted) {
    double total = 0.0;
    for (const Candidate& c : candidates) {
      if (c.active) total += c.entry->freq;
    }
    if (total <= 0.0) {
      throw Error(ErrorCode::kUnreachable,
                  "placed " + std::to_string(plan.edits.size()) + " of " +
                      std::to_string(wanted) +
                      " edits before eligible sites ran out (max achievable "
                      "edit count " +
                      std::to_string(plan.edits.size()) + ")");
    }
    const double u = rng.Uniform01() * total;
    Candidate* chosen = nullptr;
    double acc = 0.0;
    for (Candidate& c : candidates) {
      if (!c.active) continue;
      chosen = &c;
      acc += c.entry->freq;
      if (u < acc) break;
    }

    SitePool& pool = *chosen->pool;
    const bool is_insert = chosen->entry->kind == ErrorKind::kInsert;
    bool placed = false;
    while (!pool.sites.empty()) {
      const std::size_t k = rng.UniformIndex(pool.sites.size());
      const std::size_t site = pool.sites[k];
      pool.sites[k] = pool.sites.back();
      pool.sites.pop_back();
      if (is_insert ? state.GapFree(site) : state.PositionFree(site)) {
        if (is_insert) {
          state.TakeGap(site);
        } else {
          state.TakePosition(site);
        }
        plan.edits.push_back({site, *chosen->entry});
        placed = true;
        break;
      }
    }
    if (!placed) {
      for (Candidate& c : candidates) {
        if (c.pool == &pool) c.active = false;
      }
    }
  }

  std::sort(plan.edits.begin(), plan.edits.end(),
            [](const PlannedEdit& a, const PlannedEdit& b) {
              const bool a_ins = a.entry.kind == ErrorKind::kInsert;
              const bool b_ins = b.entry.kind == ErrorKind::kInsert;
              return std::tie(a.index, b_ins) < std::tie(b.index, a_ins);
            });
  return plan;
}

EditPlan PlanEdits(std::string_view text, const ErrorModel& model,
                   const InjectionConfig& config) {
  return PlanEditsUnits(Normalize(text, config.policy), model, config);
}

UnitSeq ApplyPlanUnits(std::u32string_view units, const EditPlan& plan) {
  const std::size_t n = units.size();
  if (plan.ref_len != n) {
    throw Error(ErrorCode::kInternal,
                "plan was made for " + std::to_string(plan.ref_len) +
                    " units, text has " + std::to_string(n));
  }
  std::vector<const PlannedEdit*> at_position(n, nullptr);
  std::vector<const PlannedEdit*> at_gap(n + 1, nullptr);
  for (const PlannedEdit& edit : plan.edits) {
    const bool insert = edit.entry.kind == ErrorKind::kInsert;
    if (edit.index > (insert ? n : n - 1)) {
      throw Error(ErrorCode::kInternal,
                  "edit index " + std::to_string(edit.index) + " out of range");
    }
    auto& slot = insert ? at_gap[edit.index] : at_position[edit.index];
    if (slot != nullptr) {
      throw Error(ErrorCode::kInternal,
                  "two edits at index " + std::to_string(edit.index));
    }
    if (!insert) {
      Unit source;
      if (!edit.entry.source || !ParseSingleUnit(*edit.entry.source, &source) ||
          source != units[edit.index]) {
        throw Error(ErrorCode::kInternal,
                    "edit source does not match the text at " +
                        std::to_string(edit.index));
      }
    }
    slot = &edit;
  }

  const auto target_of = [](const PlannedEdit& e) {
    Unit t;
    if (!e.entry.target || !ParseSingleUnit(*e.entry.target, &t)) {
      throw Error(ErrorCode::kInternal, "edit has no single-unit target");
    }
    return t;
  };
  UnitSeq out;
  out.reserve(n + plan.edits.size());
  for (std::size_t i = 0; i <= n; ++i) {
    if (at_gap[i]) out.push_back(target_of(*at_gap[i]));
    if (i == n) break;
    const PlannedEdit* e = at_position[i];
    if (e == nullptr) {
      out.push_back(units[i]);
    } else if (e->entry.kind == ErrorKind::kSubstitute) {
      out.push_back(target_of(*e));
    }
  }
  return out;
}

std::string ApplyPlan(std::string_view text, const EditPlan& plan,
                      const NormalizationPolicy& policy) {
  if (plan.edits.empty()) return std::string(text);
  return EncodeUtf8(ApplyPlanUnits(Normalize(text, policy), plan));
}

InjectionResult Inject(std::string_view text, const ErrorModel& model,
                       const InjectionConfig& config) {
  const UnitSeq units = Normalize(text, config.policy);
  InjectionResult result;
  result.seed = config.seed;
  result.plan = PlanEditsUnits(units, model, config);
  if (result.plan.edits.empty()) {
    result.noisy_text = std::string(text);
    result.achieved_cer = 0.0;
  } else {
    const UnitSeq noisy = ApplyPlanUnits(units, result.plan);
    result.noisy_text = EncodeUtf8(noisy);
    const CerReport measured = ComputeCerUnits(units, noisy);
    result.achieved_cer = measured.cer;
    result.distance = measured.distance;
  }
  result.off_target =
      std::abs(result.achieved_cer - config.target_cer) > config.tolerance;
  return result;
}

}  // namespace ocrkit
