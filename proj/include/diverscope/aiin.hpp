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

#ifndef DIVERSCOPE_AIIN_HPP_
#define DIVERSCOPE_AIIN_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "diverscope/dataset.hpp"
#include "diverscope/image.hpp"

namespace diverscope {

// Adaptive input-image normalization: contrast-limited histogram
// equalization over a grid of non-overlapping windows, with the per-window
// mappings blended bilinearly between window centers.

using Histogram = std::array<std::uint32_t, 256>;
using Lut = std::array<std::uint8_t, 256>;

enum class Stitch {
  kBilinear,  // blend the four nearest window mappings
  kPerTile,   // each pixel uses only its own window's mapping
};

struct AiinConfig {
  int grid_n = 8;                   // windows per axis
  double contrast_threshold = 0.0;  // 0 disables clipping
  Stitch stitch = Stitch::kBilinear;
};

/// Throws kInvalidArgument unless grid_n >= 1 and the threshold is a finite
/// non-negative number.
void Validate(const AiinConfig& config);

struct TileMapping {
  int row = 0;
  int col = 0;
  Lut lut{};
};

/// Per-bin clip limit max(1, floor(threshold * tile_area / 256)).
std::uint64_t ClipLimit(double threshold, std::uint64_t tile_area);

/// Clips every bin at ClipLimit() and spreads the excess uniformly over all
/// 256 bins in a single pass; the remainder of the integer division adds one
/// count per bin starting at bin 0. Threshold 0 returns `hist` unchanged.
Histogram ClipHistogram(const Histogram& hist, double threshold,
                        std::uint64_t tile_area);

/// Equalization mapping lut[v] = round((cdf(v) - cdf_min) * 255 /
/// (tile_area - cdf_min)), cdf_min being the smallest nonzero cdf value.
/// A single-intensity tile gets the identity mapping.
Lut TileLut(const Histogram& hist, std::uint64_t tile_area);

/// Pixel bounds [begin, end) of window `index` along an axis of `extent`
/// pixels split into `grid_n` windows; the last window absorbs the remainder.
struct Span1d {
  int begin = 0;
  int end = 0;
};
Span1d WindowSpan(int extent, int grid_n, int index);

/// The clipped, equalized mapping of every window, row-major.
std::vector<TileMapping> ComputeTileMappings(const GrayImage& image,
                                             const AiinConfig& config);

/// Normalizes one image. Requires width, height >= grid_n.
GrayImage AiinNormalize(const GrayImage& image, const AiinConfig& config);

/// Normalizes every image of `dataset` with one config and writes the
/// results as PNG into `out_dir`, keeping file names (non-PNG extensions are
/// replaced by .png). On a write failure nothing is left behind.
Dataset NormalizeDataset(const Dataset& dataset, const AiinConfig& config,
                         const std::filesystem::path& out_dir,
                         int threads = 0);

/// In-memory variant of NormalizeDataset; paths are carried over unchanged.
Dataset NormalizeDatasetInMemory(const Dataset& dataset,
                                 const AiinConfig& config, int threads = 0);

}  // namespace diverscope

#endif  // DIVERSCOPE_AIIN_HPP_
