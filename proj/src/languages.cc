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

#include "ocrkit/languages.h"

#include <algorithm>
#include <array>

namespace ocrkit {
namespace {

using G = ScriptGroup;

constexpr std::array<LanguageInfo, 60> kLanguages = {{
    {"amh", "Amharic", "Ge'ez", G::kOther},
    {"ara", "Arabic", "Arabic", G::kPersoArabic},
    {"ast", "Asturian", "Latin", G::kLatin},
    {"bel", "Belarusian", "Cyrillic", G::kCyrillic},
    {"ben", "Bengali", "Bengali", G::kNorthIndic},
    {"bul", "Bulgarian", "Cyrillic", G::kCyrillic},
    {"ceb", "Cebuano", "Latin", G::kLatin},
    {"ckb", "Sorani Kurdish", "Arabic", G::kPersoArabic},
    {"ell", "Greek", "Greek", G::kOther},
    {"ful", "Fula", "Latin", G::kLatin},
    {"guj", "Gujarati", "Gujarati", G::kNorthIndic},
    {"heb", "Hebrew", "Hebrew", G::kOther},
    {"hin", "Hindi", "Devanagari", G::kNorthIndic},
    {"hye", "Armenian", "Armenian", G::kOther},
    {"isl", "Icelandic", "Latin", G::kLatin},
    {"jpn", "Japanese", "Han, Hiragana, Katakana", G::kCjk},
    {"kan", "Kannada", "Telugu-Kannada", G::kSouthIndic},
    {"kat", "Georgian", "Georgian", G::kOther},
    {"kaz", "Kazakh", "Cyrillic", G::kCyrillic},
    {"khm", "Khmer", "Khmer", G::kSea},
    {"kir", "Kyrgyz", "Cyrillic", G::kCyrillic},
    {"kor", "Korean", "Hangul", G::kCjk},
    {"lao", "Lao", "Lao", G::kSea},
    {"lin", "Lingala", "Latin", G::kLatin},
    {"lug", "Ganda", "Latin", G::kLatin},
    {"mal", "Malayalam", "Malayalam", G::kSouthIndic},
    {"mar", "Marathi", "Devanagari", G::kNorthIndic},
    {"mkd", "Macedonian", "Cyrillic", G::kCyrillic},
    {"mon", "Mongolian", "Cyrillic", G::kCyrillic},
    {"mri", "Maori", "Latin", G::kLatin},
    {"mya", "Burmese", "Myanmar", G::kSea},
    {"npi", "Nepali", "Devanagari", G::kNorthIndic},
    {"nya", "Nyanja", "Latin", G::kLatin},
    {"orm", "Oromo", "Latin", G::kLatin},
    {"pan", "Punjabi", "Gurmukhi", G::kNorthIndic},
    {"pol", "Polish", "Latin", G::kLatin},
    {"por", "Portuguese (Portugal)", "Latin", G::kLatin},
    {"pus", "Pashto", "Perso-Arabic", G::kPersoArabic},
    {"ron", "Romanian", "Latin", G::kLatin},
    {"rus", "Russian", "Cyrillic", G::kCyrillic},
    {"slk", "Slovak", "Latin", G::kLatin},
    {"slv", "Slovenian", "Latin", G::kLatin},
    {"sna", "Shona", "Latin", G::kLatin},
    {"som", "Somali", "Latin", G::kLatin},
    {"srp", "Serbian", "Cyrillic", G::kCyrillic},
    {"swe", "Swedish", "Latin", G::kLatin},
    {"swh", "Swahili", "Latin", G::kLatin},
    {"tam", "Tamil", "Tamil", G::kSouthIndic},
    {"tel", "Telugu", "Telugu-Kannada", G::kSouthIndic},
    {"tgk", "Tajik", "Cyrillic", G::kCyrillic},
    {"tha", "Thai", "Thai", G::kSea},
    {"tur", "Turkish", "Latin", G::kLatin},
    {"ukr", "Ukrainian", "Cyrillic", G::kCyrillic},
    {"umb", "Umbundu", "Latin", G::kLatin},
    {"urd", "Urdu", "Perso-Arabic", G::kPersoArabic},
    {"uzb", "Uzbek", "Latin", G::kLatin},
    {"vie", "Vietnamese", "Latin", G::kLatin},
    {"wol", "Wolof", "Latin", G::kLatin},
    {"zho", "Chinese Simpl", "Hant", G::kCjk},
    {"zul", "Zulu", "Latin", G::kLatin},
}};

constexpr std::array<std::string_view, 8> kGroupNames = {
    "Latin", "Cyrillic", "Perso-Arabic", "North Indic",
    "South Indic", "SEA", "CJK", "Other"};

}  // namespace

std::string_view ScriptGroupName(ScriptGroup group) {
  return kGroupNames[static_cast<std::size_t>(group)];
}

std::optional<ScriptGroup> ParseScriptGroup(std::string_view name) {
  for (std::size_t i = 0; i < kGroupNames.size(); ++i) {
    if (kGroupNames[i] == name) return static_cast<ScriptGroup>(i);
  }
  return std::nullopt;
}

std::span<const LanguageInfo> BenchmarkLanguages() { return kLanguages; }

std::optional<LanguageInfo> FindLanguage(std::string_view code) {
  const auto it = std::lower_bound(
      kLanguages.begin(), kLanguages.end(), code,
      [](const LanguageInfo& l, std::string_view c) { return l.code < c; });
  if (it == kLanguages.end() || it->code != code) return std::nullopt;
  return *it;
}

}  // namespace ocrkit
