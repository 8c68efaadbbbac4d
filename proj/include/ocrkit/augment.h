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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocrkit {

enum class PixelFormat : std::uint8_t { kGray8 = 1, kRgb8 = 3 };

// Row-major, interleaved channels, 8 bits per sample.
class PageImage {
 public:
  PageImage() = default;
  PageImage(int width, int height, PixelFormat format, std::uint8_t fill = 255);
  PageImage(int width, int height, PixelFormat format,
            std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  PixelFormat format() const { return format_; }
  int channels() const { return static_cast<int>(format_); }

  std::uint8_t* at(int x, int y) {
    return &pixels_[(static_cast<std::size_t>(y) * width_ + x) * channels()];
  }
  const std::uint8_t* at(int x, int y) const {
    return &pixels_[(static_cast<std::size_t>(y) * width_ + x) * channels()];
  }

  const std::vector<std::uint8_t>& pixels() const { return pixels_; }
  std::vector<std::uint8_t>& pixels() { return pixels_; }

  bool operator==(const PageImage&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  PixelFormat format_ = PixelFormat::kGray8;
  std::vector<std::uint8_t> pixels_;
};

struct SaltPepperStats {
  std::size_t corrupted = 0;  // corruption draws, not changed pixels
};

// Every pixel is independently corrupted with probability `density` and
// set to pure black or pure white with equal odds (all channels alike).
// Per pixel, in row-major order, the stream yields one Uniform01 draw and,
// for corrupted pixels, one Next() whose low bit picks white.
PageImage SaltPepper(const PageImage& img, double density, std::uint64_t seed,
                     SaltPepperStats* stats = nullptr);

// Rotates counter-clockwise by angle_deg about the center with bilinear
// resampling onto a canvas enlarged to hold the whole rotated page. Source
// samples falling outside the page read as `fill`. |angle| <= 45; exact
// multiples of 90 take a lossless path.
PageImage Skew(const PageImage& img, double angle_deg, std::uint8_t fill = 255);

// Blends toward white: out = alpha * in + (1 - alpha) * 255, half-up.
PageImage Opacity(const PageImage& img, double alpha);

// Centered crop (or pad with `fill`) to the given size.
PageImage CenterCrop(const PageImage& img, int width, int height,
                     std::uint8_t fill = 255);

// PNG (libpng) and binary PGM/PPM (P5/P6). Format is picked by extension
// on write and by signature on read. PNGs with alpha are composited on
// white; 16-bit samples are reduced to 8.
PageImage ReadImage(const std::filesystem::path& path);
void WriteImage(const PageImage& img, const std::filesystem::path& path);
PageImage ReadPnm(const std::filesystem::path& path);
void WritePnm(const PageImage& img, const std::filesystem::path& path);
PageImage ReadPng(const std::filesystem::path& path);
void WritePng(const PageImage& img, const std::filesystem::path& path);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

struct StyleSpec {
  std::string font_family = "Times New Roman";
  double font_size = 12.0;  // points
  bool bold = false;
  bool italic = false;
  double letter_spacing = 0.0;  // em
  double opacity = 1.0;         // (0, 1]
  Rgb color;
};

struct FontChoice {
  std::string_view script;
  std::vector<std::string_view> fonts;  // preferred first
  bool rtl = false;
};

// Default fonts per script tag (latin, arabic, cyrillic, devanagari,
// pashto, urdu, thai, hant).
const std::vector<FontChoice>& ScriptFontTable();

struct StyledDocument {
  std::string html;
  std::vector<std::string> warnings;
};

// Self-contained HTML page with inline CSS carrying every style field.
// With a known script tag its fonts lead the font-family list; an unknown
// tag falls back to style.font_family and adds a warning. Throws
// kInvalidArgument for invalid UTF-8, opacity outside (0, 1] or a
// non-positive font size.
StyledDocument EmitStyledDocument(std::string_view text, const StyleSpec& style,
                                  std::string_view script = {});

}  // namespace ocrkit
