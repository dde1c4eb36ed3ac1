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

#include "diverscope/aiin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "diverscope/error.hpp"
#include "diverscope/parallel.hpp"

namespace diverscope {

namespace {

struct AxisTap {
  int lo = 0;
  int hi = 0;
  double frac = 0.0;
};

// For every pixel coordinate along one axis: the pair of windows whose
// centers bracket it and the blend fraction toward the second one.
std::vector<AxisTap> AxisTaps(int extent, int grid_n) {
  std::vector<double> centers(static_cast<std::size_t>(grid_n));
  for (int t = 0; t < grid_n; ++t) {
    const Span1d span = WindowSpan(extent, grid_n, t);
    centers[t] = (span.begin + span.end - 1) / 2.0;
  }
  std::vector<AxisTap> taps(static_cast<std::size_t>(extent));
  int t = 0;
  for (int p = 0; p < extent; ++p) {
    if (p <= centers.front()) {
      taps[p] = {0, 0, 0.0};
    } else if (p >= centers.back()) {
      taps[p] = {grid_n - 1, grid_n - 1, 0.0};
    } else {
      while (centers[t + 1] <= p) ++t;
      taps[p] = {t, t + 1, (p - centers[t]) / (centers[t + 1] - centers[t])};
    }
  }
  return taps;
}

std::uint8_t RoundClamp(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
}

}  // namespace

void Validate(const AiinConfig& config) {
  if (config.grid_n < 1) {
    Fail(ErrorCode::kInvalidArgument,
         "grid_n must be >= 1, got " + std::to_string(config.grid_n));
  }
  if (!std::isfinite(config.contrast_threshold) ||
      config.contrast_threshold < 0.0) {
    Fail(ErrorCode::kInvalidArgument,
         "contrast threshold must be finite and >= 0");
  }
}

std::uint64_t ClipLimit(double threshold, std::uint64_t tile_area) {
  const double scaled = std::min(
      std::floor(threshold * static_cast<double>(tile_area) / 256.0), 0x1p62);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(scaled));
}

Histogram ClipHistogram(const Histogram& hist, double threshold,
                        std::uint64_t tile_area) {
  const std::uint64_t total =
      std::accumulate(hist.begin(), hist.end(), std::uint64_t{0});
  if (total != tile_area) {
    Fail(ErrorCode::kInvalidArgument,
         "histogram sums to " + std::to_string(total) + ", tile area is " +
             std::to_string(tile_area));
  }
  if (!std::isfinite(threshold) || threshold < 0.0) {
    Fail(ErrorCode::kInvalidArgument, "contrast threshold must be >= 0");
  }
  if (threshold == 0.0) return hist;

  const std::uint64_t limit = ClipLimit(threshold, tile_area);
  Histogram clipped = hist;
  std::uint64_t excess = 0;
  for (auto& bin : clipped) {
    if (bin > limit) {
      excess += bin - limit;
      bin = static_cast<std::uint32_t>(limit);
    }
  }
  const auto share = static_cast<std::uint32_t>(excess / 256);
  const std::uint64_t remainder = excess % 256;
  for (std::size_t v = 0; v < clipped.size(); ++v) {
    clipped[v] += share + (v < remainder ? 1u : 0u);
  }
  return clipped;
}

Lut TileLut(const Histogram& hist, std::uint64_t tile_area) {
  if (tile_area == 0) Fail(ErrorCode::kInvalidArgument, "empty tile");
  std::array<std::uint64_t, 256> cdf{};
  std::uint64_t running = 0;
  std::uint64_t cdf_min = 0;
  for (std::size_t v = 0; v < 256; ++v) {
    running += hist[v];
    cdf[v] = running;
    if (cdf_min == 0 && running > 0) cdf_min = running;
  }
  if (running != tile_area) {
    Fail(ErrorCode::kInvalidArgument,
         "histogram sums to " + std::to_string(running) + ", tile area is " +
             std::to_string(tile_area));
  }

  Lut lut{};
  if (cdf_min == tile_area) {
    std::iota(lut.begin(), lut.end(), std::uint8_t{0});
    return lut;
  }
  // Integer rounding, half away from zero on the non-negative quotient.
  const std::uint64_t denom = tile_area - cdf_min;
  for (std::size_t v = 0; v < 256; ++v) {
    if (cdf[v] <= cdf_min) {
      lut[v] = 0;
      continue;
    }
    const std::uint64_t num = (cdf[v] - cdf_min) * 255;
    lut[v] = static_cast<std::uint8_t>((2 * num + denom) / (2 * denom));
  }
  return lut;
}

Span1d WindowSpan(int extent, int grid_n, int index) {
  const int size = extent / grid_n;
  return {index * size, index == grid_n - 1 ? extent : (index + 1) * size};
}

std::vector<TileMapping> ComputeTileMappings(const GrayImage& image,
                                             const AiinConfig& config) {
  Validate(config);
  if (image.empty() || image.width() < config.grid_n ||
      image.height() < config.grid_n) {
    Fail(ErrorCode::kInvalidArgument,
         "image " + std::to_string(image.width()) + "x" +
             std::to_string(image.height()) + " is smaller than the " +
             std::to_string(config.grid_n) + "x" +
             std::to_string(config.grid_n) + " window grid");
  }
  const int n = config.grid_n;
  std::vector<TileMapping> tiles;
  tiles.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    const Span1d ys = WindowSpan(image.height(), n, row);
    for (int col = 0; col < n; ++col) {
      const Span1d xs = WindowSpan(image.width(), n, col);
      Histogram hist{};
      for (int y = ys.begin; y < ys.end; ++y) {
        for (int x = xs.begin; x < xs.end; ++x) ++hist[image.at(x, y)];
      }
      const auto area = static_cast<std::uint64_t>(ys.end - ys.begin) *
                        static_cast<std::uint64_t>(xs.end - xs.begin);
      // A single-intensity tile keeps the identity LUT even when clipping
      // would spread its mass over other bins.
      const bool single = *std::max_element(hist.begin(), hist.end()) == area;
      tiles.push_back(
          {row, col,
           single ? TileLut(hist, area)
                  : TileLut(ClipHistogram(hist, config.contrast_threshold, area), area)});
    }
  }
  return tiles;
}

GrayImage AiinNormalize(const GrayImage& image, const AiinConfig& config) {
  const std::vector<TileMapping> tiles = ComputeTileMappings(image, config);
  const int n = config.grid_n;
  auto lut = [&](int row, int col) -> const Lut& {
    return tiles[static_cast<std::size_t>(row) * n + col].lut;
  };

  GrayImage out(image.width(), image.height());
  if (config.stitch == Stitch::kPerTile) {
    for (int row = 0; row < n; ++row) {
      const Span1d ys = WindowSpan(image.height(), n, row);
      for (int col = 0; col < n; ++col) {
        const Span1d xs = WindowSpan(image.width(), n, col);
        const Lut& map = lut(row, col);
        for (int y = ys.begin; y < ys.end; ++y) {
          for (int x = xs.begin; x < xs.end; ++x) {
            out.at(x, y) = map[image.at(x, y)];
          }
        }
      }
    }
    return out;
  }

  const std::vector<AxisTap> xtaps = AxisTaps(image.width(), n);
  const std::vector<AxisTap> ytaps = AxisTaps(image.height(), n);
  for (int y = 0; y < image.height(); ++y) {
    const AxisTap& ty = ytaps[y];
    for (int x = 0; x < image.width(); ++x) {
      const AxisTap& tx = xtaps[x];
      const std::uint8_t v = image.at(x, y);
      const double top = (1.0 - tx.frac) * lut(ty.lo, tx.lo)[v] +
                         tx.frac * lut(ty.lo, tx.hi)[v];
      const double bottom = (1.0 - tx.frac) * lut(ty.hi, tx.lo)[v] +
                            tx.frac * lut(ty.hi, tx.hi)[v];
      out.at(x, y) = RoundClamp((1.0 - ty.frac) * top + ty.frac * bottom);
    }
  }
  return out;
}

Dataset NormalizeDatasetInMemory(const Dataset& dataset,
                                 const AiinConfig& config, int threads) {
  if (dataset.empty()) Fail(ErrorCode::kInvalidArgument, "dataset has no items");
  Validate(config);
  Dataset out;
  out.label = dataset.label;
  out.items.resize(dataset.size());
  ParallelFor(dataset.size(), threads, [&](std::size_t i) {
    out.items[i] = {dataset.items[i].path,
                    AiinNormalize(dataset.items[i].image, config)};
  });
  return out;
}

Dataset NormalizeDataset(const Dataset& dataset, const AiinConfig& config,
                         const std::filesystem::path& out_dir, int threads) {
  return SaveDataset(NormalizeDatasetInMemory(dataset, config, threads),
                     out_dir);
}

}  // namespace diverscope
