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

#include <string>
#include <string_view>
#include <vector>

namespace ocrkit {

// One comparable text unit. Code points map to themselves; grapheme
// clusters spanning several code points are interned to ids at or above
// kFirstClusterUnit (outside the Unicode code space).
using Unit = char32_t;
using UnitSeq = std::u32string;

inline constexpr Unit kFirstClusterUnit = 0x110000;

bool IsValidUtf8(std::string_view bytes);

// Throws Error(kInvalidUtf8) with the byte offset of the first bad sequence.
std::u32string DecodeUtf8(std::string_view bytes);

// Expands interned clusters.
std::string EncodeUtf8(std::u32string_view units);

std::u32string NfcNormalize(std::u32string_view text);

std::vector<std::u32string> SplitGraphemes(std::u32string_view text);

bool IsUnicodeWhitespace(char32_t c);

// Returns the unit for a cluster; single code points are returned as-is.
Unit InternCluster(std::u32string_view code_points);

// Code points making up a unit.
std::u32string ExpandUnit(Unit unit);

inline std::string UnitToUtf8(Unit unit) {
  return EncodeUtf8(std::u32string_view(&unit, 1));
}

// Parses a UTF-8 string holding exactly one unit (one code point, or one
// grapheme cluster). Returns false if it holds zero or several clusters.
bool ParseSingleUnit(std::string_view utf8, Unit* unit);

}  // namespace ocrkit
