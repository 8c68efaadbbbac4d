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

#include "ocrkit/unicode.h"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "ocrkit/status.h"

namespace ocrkit {
namespace {

// Returns the decoded code point and advances *pos, or -1 on a malformed
// sequence (overlongs, surrogates and values above U+10FFFF included).
long DecodeOne(std::string_view s, std::size_t* pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(s[i]);
  };
  const std::size_t i = *pos;
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    *pos = i + 1;
    return b0;
  }
  int len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return -1;
  }
  if (i + len > s.size()) return -1;
  for (int k = 1; k < len; ++k) {
    const unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return -1;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return -1;
  *pos = i + len;
  return static_cast<long>(cp);
}

void AppendUtf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

icu::UnicodeString ToIcu(std::u32string_view text) {
  return icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
}

std::u32string FromIcu(const icu::UnicodeString& s) {
  std::u32string out;
  out.reserve(s.length());
  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

class ClusterRegistry {
 public:
  static ClusterRegistry& Get() {
    static ClusterRegistry registry;
    return registry;
  }

  Unit Intern(std::u32string_view cps) {
    const std::u32string key(cps);
    {
      std::shared_lock lock(mu_);
      if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const Unit id = kFirstClusterUnit + static_cast<Unit>(clusters_.size());
    clusters_.push_back(key);
    ids_.emplace(key, id);
    return id;
  }

  std::u32string Expand(Unit unit) const {
    std::shared_lock lock(mu_);
    const std::size_t index = unit - kFirstClusterUnit;
    if (index >= clusters_.size()) {
      throw Error(ErrorCode::kInternal, "unknown cluster unit");
    }
    return clusters_[index];
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::u32string, Unit> ids_;
  std::vector<std::u32string> clusters_;
};

}  // namespace

bool IsValidUtf8(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (DecodeOne(bytes, &pos) < 0) return false;
  }
  return true;
}

std::u32string DecodeUtf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::size_t start = pos;
    const long cp = DecodeOne(bytes, &pos);
    if (cp < 0) {
      throw Error(ErrorCode::kInvalidUtf8,
                  "invalid UTF-8 at byte offset " + std::to_string(start));
    }
    out.push_back(static_cast<char32_t>(cp));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view units) {
  std::string out;
  out.reserve(units.size());
  for (const Unit u : units) {
    if (u < kFirstClusterUnit) {
      AppendUtf8(u, &out);
    } else {
      for (const char32_t cp : ClusterRegistry::Get().Expand(u)) {
        AppendUtf8(cp, &out);
      }
    }
  }
  return out;
}

std::u32string NfcNormalize(std::u32string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal,
                std::string("ICU NFC unavailable: ") + u_errorName(status));
  }
  const icu::UnicodeString normalized = nfc->normalize(ToIcu(text), status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal,
                std::string("NFC failed: ") + u_errorName(status));
  }
  return FromIcu(normalized);
}

std::vector<std::u32string> SplitGraphemes(std::u32string_view text) {
  std::vector<std::u32string> clusters;
  if (text.empty()) return clusters;
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::BreakIterator> it(
      icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(),
                                                  status));
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal,
                std::string("ICU break iterator: ") + u_errorName(status));
  }
  const icu::UnicodeString s = ToIcu(text);
  it->setText(s);
  int32_t start = it->first();
  for (int32_t end = it->next(); end != icu::BreakIterator::DONE;
       start = end, end = it->next()) {
    clusters.push_back(FromIcu(icu::UnicodeString(s, start, end - start)));
  }
  return clusters;
}

bool IsUnicodeWhitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

Unit InternCluster(std::u32string_view code_points) {
  if (code_points.size() == 1) return code_points.front();
  return ClusterRegistry::Get().Intern(code_points);
}

std::u32string ExpandUnit(Unit unit) {
  if (unit < kFirstClusterUnit) return std::u32string(1, unit);
  return ClusterRegistry::Get().Expand(unit);
}

bool ParseSingleUnit(std::string_view utf8, Unit* unit) {
  const std::u32string cps = DecodeUtf8(utf8);
  if (cps.empty()) return false;
  if (cps.size() == 1) {
    *unit = cps.front();
    return true;
  }
  if (SplitGraphemes(cps).size() != 1) return false;
  *unit = InternCluster(cps);
  return true;
}

}  // namespace ocrkit
