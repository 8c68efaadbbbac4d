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

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace ocrkit {

enum class ScriptGroup {
  kLatin,
  kCyrillic,
  kPersoArabic,
  kNorthIndic,
  kSouthIndic,
  kSea,
  kCjk,
  kOther,
};

std::string_view ScriptGroupName(ScriptGroup group);
std::optional<ScriptGroup> ParseScriptGroup(std::string_view name);

struct LanguageInfo {
  std::string_view code;  // ISO 639-3 (Flores-101 style)
  std::string_view name;
  std::string_view script;
  ScriptGroup group;
};

// The 60 benchmark languages, ordered by code.
std::span<const LanguageInfo> BenchmarkLanguages();

std::optional<LanguageInfo> FindLanguage(std::string_view code);

}  // namespace ocrkit
