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

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ocrkit/augment.h"
#include "ocrkit/corpus.h"
#include "ocrkit/status.h"

namespace ocrkit {
namespace fs = std::filesystem;

namespace {

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Reads the next header integer, skipping whitespace and '#' comments.
int NextPnmInt(const std::string& data, std::size_t* pos) {
  while (*pos < data.size()) {
    const char c = data[*pos];
    if (c == '#') {
      while (*pos < data.size() && data[*pos] != '\n') ++*pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++*pos;
    } else {
      break;
    }
  }
  int value = 0;
  bool any = false;
  while (*pos < data.size() && std::isdigit(static_cast<unsigned char>(data[*pos]))) {
    value = value * 10 + (data[*pos] - '0');
    if (value > (1 << 24)) break;
    any = true;
    ++*pos;
  }
  if (!any) throw Error(ErrorCode::kIo, "malformed PNM header");
  return value;
}

}  // namespace

PageImage ReadPnm(const fs::path& path) {
  const std::string data = ReadFile(path);
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '5' && data[1] != '6')) {
    throw Error(ErrorCode::kIo, "not a binary PGM/PPM file: " + path.string());
  }
  const PixelFormat format = data[1] == '5' ? PixelFormat::kGray8 : PixelFormat::kRgb8;
  std::size_t pos = 2;
  const int width = NextPnmInt(data, &pos);
  const int height = NextPnmInt(data, &pos);
  const int maxval = NextPnmInt(data, &pos);
  if (maxval != 255) {
    throw Error(ErrorCode::kIo, "only 8-bit PNM is supported: " + path.string());
  }
  ++pos;  // single whitespace before raster
  const std::size_t bytes =
      static_cast<std::size_t>(width) * height * static_cast<int>(format);
  if (data.size() < pos + bytes) {
    throw Error(ErrorCode::kIo, "truncated PNM raster: " + path.string());
  }
  return PageImage(width, height, format,
                   std::vector<std::uint8_t>(data.begin() + pos,
                                             data.begin() + pos + bytes));
}

void WritePnm(const PageImage& img, const fs::path& path) {
  std::ostringstream out;
  out << (img.format() == PixelFormat::kGray8 ? "P5" : "P6") << "\n"
      << img.width() << " " << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.pixels().size()));
  WriteFile(path, out.str());
}

PageImage ReadPng(const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw Error(ErrorCode::kIo, "cannot read PNG " + path.string() + ": " +
                                    image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const PixelFormat format = color ? PixelFormat::kRgb8 : PixelFormat::kGray8;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(image));
  png_color white{255, 255, 255};
  if (!png_image_finish_read(&image, &white, pixels.data(), 0, nullptr)) {
    throw Error(ErrorCode::kIo, "cannot decode PNG " + path.string() + ": " +
                                    image.message);
  }
  return PageImage(static_cast<int>(image.width), static_cast<int>(image.height),
                   format, std::move(pixels));
}

void WritePng(const PageImage& img, const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format =
      img.format() == PixelFormat::kGray8 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, path.c_str(), 0, img.pixels().data(), 0,
                               nullptr)) {
    throw Error(ErrorCode::kIo, "cannot write PNG " + path.string() + ": " +
                                    image.message);
  }
}

PageImage ReadImage(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read image: " + path.string());
  char sig[8] = {};
  in.read(sig, sizeof(sig));
  static constexpr unsigned char kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (in.gcount() == 8 && std::memcmp(sig, kPngSig, 8) == 0) return ReadPng(path);
  return ReadPnm(path);
}

void WriteImage(const PageImage& img, const fs::path& path) {
  const std::string ext = Lower(path.extension().string());
  if (ext == ".png") {
    WritePng(img, path);
  } else if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") {
    WritePnm(img, path);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unsupported image extension '" + ext + "' (png, pgm, ppm)");
  }
}

}  // namespace ocrkit
