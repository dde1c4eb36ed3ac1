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

#ifndef DIVERSCOPE_TESTS_TEST_UTIL_HPP_
#define DIVERSCOPE_TESTS_TEST_UTIL_HPP_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "diverscope/image.hpp"
#include "oracles/oracles.hpp"
#include "temp_dir.hpp"

namespace testutil {

inline diverscope::GrayImage ToImage(const oracle::Pixels& px, int w, int h) {
  std::vector<std::uint8_t> bytes(px.begin(), px.end());
  return diverscope::GrayImage(w, h, std::move(bytes));
}

inline oracle::Pixels ToPixels(const diverscope::GrayImage& image) {
  return oracle::Pixels(image.pixels().begin(), image.pixels().end());
}

inline diverscope::GrayImage RandomImage(std::uint64_t seed, int w, int h) {
  return ToImage(oracle::RandomPixels(seed, w, h), w, h);
}

// Smooth random field plus noise; gives MS-SSIM structure to work with.
inline diverscope::GrayImage StructuredImage(std::uint64_t seed, int w, int h) {
  std::mt19937_64 gen(seed);
  const double fx = 1.0 + (gen() % 1000) / 250.0;
  const double fy = 1.0 + (gen() % 1000) / 250.0;
  const double phase = (gen() % 1000) / 160.0;
  diverscope::GrayImage image(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double v = 128 + 80 * std::sin(fx * x * 6.2831853 / w + phase) *
                                 std::cos(fy * y * 6.2831853 / h) +
                       static_cast<double>(gen() % 31) - 15.0;
      image.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  }
  return image;
}

}  // namespace testutil

#endif  // DIVERSCOPE_TESTS_TEST_UTIL_HPP_
