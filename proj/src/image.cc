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
#include <cmath>
#include <numbers>

#include "ocrkit/augment.h"
#include "ocrkit/random.h"
#include "ocrkit/status.h"

namespace ocrkit {

PageImage::PageImage(int width, int height, PixelFormat format, std::uint8_t fill)
    : width_(width),
      height_(height),
      format_(format),
      pixels_(static_cast<std::size_t>(width) * height * static_cast<int>(format),
              fill) {
  if (width < 0 || height < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative image dimensions");
  }
}

PageImage::PageImage(int width, int height, PixelFormat format,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), format_(format), pixels_(std::move(pixels)) {
  if (width < 0 || height < 0 ||
      pixels_.size() !=
          static_cast<std::size_t>(width) * height * static_cast<int>(format)) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel buffer does not match width x height x channels");
  }
}

PageImage SaltPepper(const PageImage& img, double density, std::uint64_t seed,
                     SaltPepperStats* stats) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "density must lie in [0, 1]");
  }
  PageImage out = img;
  Rng rng(seed);
  const int ch = img.channels();
  std::size_t corrupted = 0;
  std::uint8_t* px = out.pixels().data();
  const std::size_t count = static_cast<std::size_t>(img.width()) * img.height();
  for (std::size_t i = 0; i < count; ++i, px += ch) {
    if (rng.Uniform01() < density) {
      const std::uint8_t v = (rng.Next() & 1) ? 255 : 0;
      std::fill(px, px + ch, v);
      ++corrupted;
    }
  }
  if (stats) stats->corrupted = corrupted;
  return out;
}

namespace {

PageImage RotateQuarterCcw(const PageImage& img) {
  const int w = img.width(), h = img.height(), ch = img.channels();
  PageImage out(h, w, img.format());
  for (int y = 0; y < w; ++y) {
    for (int x = 0; x < h; ++x) {
      const std::uint8_t* src = img.at(w - 1 - y, x);
      std::copy(src, src + ch, out.at(x, y));
    }
  }
  return out;
}

}  // namespace

PageImage Skew(const PageImage& img, double angle_deg, std::uint8_t fill) {
  if (!std::isfinite(angle_deg)) {
    throw Error(ErrorCode::kInvalidArgument, "angle must be finite");
  }
  if (angle_deg == 0.0) return img;
  if (std::fmod(angle_deg, 90.0) == 0.0) {
    const int quarters =
        ((static_cast<int>(std::llround(angle_deg / 90.0)) % 4) + 4) % 4;
    PageImage out = img;
    for (int q = 0; q < quarters; ++q) out = RotateQuarterCcw(out);
    return out;
  }
  if (std::abs(angle_deg) > 45.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "skew angle must lie within [-45, 45] degrees (or be a "
                "multiple of 90)");
  }

  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta), s = std::sin(theta);
  const int w = img.width(), h = img.height(), ch = img.channels();
  const int out_w = static_cast<int>(
      std::ceil(std::abs(w * c) + std::abs(h * s) - 1e-9));
  const int out_h = static_cast<int>(
      std::ceil(std::abs(w * s) + std::abs(h * c) - 1e-9));
  PageImage out(out_w, out_h, img.format(), fill);

  const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
  const double ocx = (out_w - 1) / 2.0, ocy = (out_h - 1) / 2.0;
  const auto sample = [&](int x, int y, int k) -> double {
    if (x < 0 || y < 0 || x >= w || y >= h) return fill;
    return img.at(x, y)[k];
  };
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const double dx = x - ocx, dy = y - ocy;
      const double sx = dx * c - dy * s + cx;
      const double sy = dx * s + dy * c + cy;
      if (sx <= -1.0 || sy <= -1.0 || sx >= w || sy >= h) continue;
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double fx = sx - x0, fy = sy - y0;
      std::uint8_t* dst = out.at(x, y);
      for (int k = 0; k < ch; ++k) {
        const double top =
            sample(x0, y0, k) * (1 - fx) + sample(x0 + 1, y0, k) * fx;
        const double bottom =
            sample(x0, y0 + 1, k) * (1 - fx) + sample(x0 + 1, y0 + 1, k) * fx;
        const double v = top * (1 - fy) + bottom * fy;
        dst[k] = static_cast<std::uint8_t>(
            std::clamp(std::floor(v + 0.5), 0.0, 255.0));
      }
    }
  }
  return out;
}

PageImage Opacity(const PageImage& img, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1]");
  }
  PageImage out = img;
  for (std::uint8_t& p : out.pixels()) {
    const double v = alpha * p + (1.0 - alpha) * 255.0;
    p = static_cast<std::uint8_t>(std::min(std::floor(v + 0.5), 255.0));
  }
  return out;
}

PageImage CenterCrop(const PageImage& img, int width, int height,
                     std::uint8_t fill) {
  PageImage out(width, height, img.format(), fill);
  const int ox = (img.width() - width) / 2;
  const int oy = (img.height() - height) / 2;
  const int ch = img.channels();
  for (int y = 0; y < height; ++y) {
    const int sy = y + oy;
    if (sy < 0 || sy >= img.height()) continue;
    for (int x = 0; x < width; ++x) {
      const int sx = x + ox;
      if (sx < 0 || sx >= img.width()) continue;
      std::copy(img.at(sx, sy), img.at(sx, sy) + ch, out.at(x, y));
    }
  }
  return out;
}

}  // namespace ocrkit
