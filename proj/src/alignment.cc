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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ocrkit/status.h"
#include "ocrkit/textmetrics.h"

namespace ocrkit {
namespace {

enum Move : std::uint8_t { kDiag, kUp, kLeft };

// Sub-problems at or below this many cells are solved with a traced matrix.
constexpr std::size_t kBaseCells = std::size_t{1} << 16;

EditOp MakeOp(EditKind kind, std::u32string_view ref, std::u32string_view hyp,
              std::size_t i, std::size_t j) {
  // i, j: positions *after* the op in ref/hyp coordinates.
  switch (kind) {
    case EditKind::kMatch:
    case EditKind::kSubstitute:
      return {kind, ref[i - 1], hyp[j - 1], i - 1};
    case EditKind::kDelete:
      return {kind, ref[i - 1], std::nullopt, i - 1};
    case EditKind::kInsert:
      return {kind, std::nullopt, hyp[j - 1], i};
  }
  return {};
}

// Traced full-matrix alignment of ref/hyp; appends ops with ref indices
// shifted by `offset`.
std::size_t FullMatrixInto(std::u32string_view ref, std::u32string_view hyp,
                           std::size_t offset, std::vector<EditOp>* out) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;
  std::vector<std::uint8_t> moves((n + 1) * width);
  std::vector<std::uint32_t> prev(width), cur(width);
  for (std::size_t j = 0; j <= m; ++j) {
    prev[j] = static_cast<std::uint32_t>(j);
    moves[j] = kLeft;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    std::uint8_t* row = &moves[i * width];
    row[0] = kUp;
    const Unit r = ref[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diag = prev[j - 1] + (r == hyp[j - 1] ? 0 : 1);
      const std::uint32_t up = prev[j] + 1;
      const std::uint32_t left = cur[j - 1] + 1;
      if (diag <= up && diag <= left) {
        cur[j] = diag;
        row[j] = kDiag;
      } else if (up <= left) {
        cur[j] = up;
        row[j] = kUp;
      } else {
        cur[j] = left;
        row[j] = kLeft;
      }
    }
    std::swap(prev, cur);
  }
  const std::size_t distance = prev[m];

  const std::size_t first = out->size();
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    EditOp op;
    switch (moves[i * width + j]) {
      case kDiag:
        op = MakeOp(ref[i - 1] == hyp[j - 1] ? EditKind::kMatch
                                             : EditKind::kSubstitute,
                    ref, hyp, i, j);
        --i, --j;
        break;
      case kUp:
        op = MakeOp(EditKind::kDelete, ref, hyp, i, j);
        --i;
        break;
      default:
        op = MakeOp(EditKind::kInsert, ref, hyp, i, j);
        --j;
        break;
    }
    op.ref_index += offset;
    out->push_back(op);
  }
  std::reverse(out->begin() + static_cast<std::ptrdiff_t>(first), out->end());
  return distance;
}

// Last DP row of ref vs hyp: row[j] = distance(ref, hyp[0, j)).
void ForwardRow(std::u32string_view ref, std::u32string_view hyp,
                std::vector<std::uint32_t>* row) {
  const std::size_t m = hyp.size();
  row->resize(m + 1);
  auto& cur = *row;
  for (std::size_t j = 0; j <= m; ++j) cur[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    std::uint32_t diag_prev = cur[0];
    cur[0] = static_cast<std::uint32_t>(i);
    const Unit r = ref[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t up = cur[j];
      const std::uint32_t v = std::min({diag_prev + (r == hyp[j - 1] ? 0u : 1u),
                                        up + 1, cur[j - 1] + 1});
      diag_prev = up;
      cur[j] = v;
    }
  }
}

// row[j] = distance(ref, hyp[j, m)).
void BackwardRow(std::u32string_view ref, std::u32string_view hyp,
                 std::vector<std::uint32_t>* row) {
  const std::u32string rref(ref.rbegin(), ref.rend());
  const std::u32string rhyp(hyp.rbegin(), hyp.rend());
  ForwardRow(rref, rhyp, row);
  std::reverse(row->begin(), row->end());
}

void LinearSpaceInto(std::u32string_view ref, std::u32string_view hyp,
                     std::size_t offset, std::vector<EditOp>* out) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  if (n <= 1 || m == 0 || (n + 1) * (m + 1) <= kBaseCells) {
    FullMatrixInto(ref, hyp, offset, out);
    return;
  }
  const std::size_t mid = n / 2;
  std::vector<std::uint32_t> fwd, bwd;
  ForwardRow(ref.substr(0, mid), hyp, &fwd);
  BackwardRow(ref.substr(mid), hyp, &bwd);
  std::size_t split = 0;
  std::uint32_t best = fwd[0] + bwd[0];
  for (std::size_t j = 1; j <= m; ++j) {
    if (fwd[j] + bwd[j] < best) {
      best = fwd[j] + bwd[j];
      split = j;
    }
  }
  LinearSpaceInto(ref.substr(0, mid), hyp.substr(0, split), offset, out);
  LinearSpaceInto(ref.substr(mid), hyp.substr(split), offset + mid, out);
}

}  // namespace

std::size_t EditDistance(std::u32string_view ref, std::u32string_view hyp) {
  // Common affixes never change the distance.
  while (!ref.empty() && !hyp.empty() && ref.front() == hyp.front()) {
    ref.remove_prefix(1);
    hyp.remove_prefix(1);
  }
  while (!ref.empty() && !hyp.empty() && ref.back() == hyp.back()) {
    ref.remove_suffix(1);
    hyp.remove_suffix(1);
  }
  if (ref.size() < hyp.size()) std::swap(ref, hyp);
  std::vector<std::uint32_t> row;
  ForwardRow(ref, hyp, &row);
  return row.back();
}

Alignment AlignFullMatrix(std::u32string_view ref, std::u32string_view hyp) {
  Alignment a;
  a.ops.reserve(std::max(ref.size(), hyp.size()));
  a.distance = FullMatrixInto(ref, hyp, 0, &a.ops);
  return a;
}

Alignment AlignLinearSpace(std::u32string_view ref, std::u32string_view hyp) {
  Alignment a;
  a.ops.reserve(std::max(ref.size(), hyp.size()));
  LinearSpaceInto(ref, hyp, 0, &a.ops);
  a.distance = CountOps(a).errors();
  return a;
}

Alignment Align(std::u32string_view ref, std::u32string_view hyp) {
  if (ref.size() <= kFullMatrixLimit && hyp.size() <= kFullMatrixLimit) {
    return AlignFullMatrix(ref, hyp);
  }
  return AlignLinearSpace(ref, hyp);
}

UnitSeq ReplayAlignment(std::u32string_view ref, const Alignment& alignment) {
  UnitSeq out;
  std::size_t next = 0;  // next unconsumed reference position
  for (const EditOp& op : alignment.ops) {
    switch (op.kind) {
      case EditKind::kMatch:
      case EditKind::kSubstitute:
      case EditKind::kDelete:
        if (op.ref_index != next || next >= ref.size() ||
            !op.ref_char || ref[next] != *op.ref_char) {
          throw Error(ErrorCode::kInternal,
                      "alignment does not follow the reference");
        }
        if (op.kind != EditKind::kDelete) out.push_back(*op.hyp_char);
        ++next;
        break;
      case EditKind::kInsert:
        if (op.ref_index != next) {
          throw Error(ErrorCode::kInternal, "insert outside current gap");
        }
        out.push_back(*op.hyp_char);
        break;
    }
  }
  if (next != ref.size()) {
    throw Error(ErrorCode::kInternal, "alignment does not cover reference");
  }
  return out;
}

OpCounts CountOps(const Alignment& alignment) {
  OpCounts c;
  for (const EditOp& op : alignment.ops) {
    switch (op.kind) {
      case EditKind::kMatch: ++c.matches; break;
      case EditKind::kSubstitute: ++c.substitutions; break;
      case EditKind::kInsert: ++c.insertions; break;
      case EditKind::kDelete: ++c.deletions; break;
    }
  }
  return c;
}

}  // namespace ocrkit
