/* Copyright 2026 The Diverscope Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef DIVERSCOPE_IMAGE_HPP_
#define DIVERSCOPE_IMAGE_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace diverscope {

/// 8-bit grayscale raster, row-major. A default-constructed image is empty;
/// every other image has width, height >= 1.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// BT.601 integer luminance, round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t Luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Decodes a PNG or JPEG file (sniffed by signature, not extension).
/// Color inputs are converted with Luminance(); alpha is discarded.
GrayImage LoadImage(const std::filesystem::path& path);

/// Writes an 8-bit grayscale PNG.
void SavePng(const GrayImage& image, const std::filesystem::path& path);

/// Bilinear resampling with half-pixel-center mapping:
/// src = (i + 0.5) * in / out - 0.5, clamped to the source extent. Results
/// are rounded half away from zero and clamped to [0, 255].
GrayImage ResizeBilinear(const GrayImage& image, int out_width, int out_height);

}  // namespace diverscope

#endif  // DIVERSCOPE_IMAGE_HPP_
