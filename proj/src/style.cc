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

#include "ocrkit/augment.h"
#include "ocrkit/status.h"
#include "ocrkit/unicode.h"

namespace ocrkit {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string EscapeHtml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string QuoteFont(std::string_view name) {
  std::string out = "\"";
  for (const char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const std::vector<FontChoice>& ScriptFontTable() {
  static const std::vector<FontChoice> table = {
      {"latin", {"Times New Roman"}, false},
      {"arabic", {"Times New Roman", "Arial"}, true},
      {"cyrillic", {"Arial", "Verdana"}, false},
      {"devanagari", {"Noto Sans Devanagari"}, false},
      {"pashto", {"Calibri"}, true},
      {"urdu", {"Jameel Noori Nastaleeq"}, true},
      {"thai", {"Browalia New"}, false},
      {"hant", {"PMingLiu"}, false},
  };
  return table;
}

StyledDocument EmitStyledDocument(std::string_view text, const StyleSpec& style,
                                  std::string_view script) {
  if (!IsValidUtf8(text)) {
    throw Error(ErrorCode::kInvalidArgument, "document text is not valid UTF-8");
  }
  if (!(style.opacity > 0.0 && style.opacity <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "opacity must lie in (0, 1]");
  }
  if (!(style.font_size > 0.0) || !std::isfinite(style.font_size)) {
    throw Error(ErrorCode::kInvalidArgument, "font size must be positive");
  }

  StyledDocument doc;
  std::string families;
  bool rtl = false;
  const FontChoice* choice = nullptr;
  for (const FontChoice& fc : ScriptFontTable()) {
    if (fc.script == script) choice = &fc;
  }
  if (choice != nullptr) {
    for (const std::string_view f : choice->fonts) families += QuoteFont(f) + ", ";
    rtl = choice->rtl;
  } else {
    if (!script.empty()) {
      doc.warnings.push_back("unknown script tag '" + std::string(script) +
                             "'; using font family '" + style.font_family + "'");
    }
    families += QuoteFont(style.font_family) + ", ";
  }
  families += "serif";

  char color[8];
  std::snprintf(color, sizeof(color), "#%02x%02x%02x", style.color.r,
                style.color.g, style.color.b);

  std::string& h = doc.html;
  h += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<style>\n";
  h += "body { margin: 0; background: #ffffff; }\n";
  h += ".page {\n";
  h += "  font-family: " + families + ";\n";
  h += "  font-size: " + Num(style.font_size) + "pt;\n";
  h += std::string("  font-weight: ") + (style.bold ? "bold" : "normal") + ";\n";
  h += std::string("  font-style: ") + (style.italic ? "italic" : "normal") + ";\n";
  h += "  letter-spacing: " + Num(style.letter_spacing) + "em;\n";
  h += "  opacity: " + Num(style.opacity) + ";\n";
  h += std::string("  color: ") + color + ";\n";
  h += "  white-space: pre-wrap;\n";
  h += "}\n</style>\n</head>\n<body>\n";
  h += std::string("<div class=\"page\" dir=\"") + (rtl ? "rtl" : "ltr") + "\">";
  h += EscapeHtml(text);
  h += "</div>\n</body>\n</html>\n";
  return doc;
}

}  // namespace ocrkit
