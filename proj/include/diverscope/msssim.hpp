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

#ifndef DIVERSCOPE_MSSSIM_HPP_
#define DIVERSCOPE_MSSSIM_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "diverscope/dataset.hpp"
#include "diverscope/image.hpp"

namespace diverscope {

/// Multi-scale SSIM settings. One weight per scale serves as the exponent of
/// the contrast and structure terms at that scale, and of the luminance term
/// at the coarsest scale used. Weights are renormalized over the scales that
/// fit the window.
struct MsSsimParams {
  int max_scales = 5;
  std::vector<double> weights = {0.0448, 0.2856, 0.3001, 0.2363, 0.1333};
  int window_side = 11;
  double sigma = 1.5;
  double c1 = (0.01 * 255) * (0.01 * 255);
  double c2 = (0.03 * 255) * (0.03 * 255);
  double c3 = (0.03 * 255) * (0.03 * 255) / 2;
};

void Validate(const MsSsimParams& params);

/// Luminance, contrast and structure at one scale, each averaged over all
/// valid (unpadded) window positions.
struct ScaleComponents {
  double luminance = 0.0;
  double contrast = 0.0;
  double structure = 0.0;
};

/// Row-major floating-point plane; MS-SSIM keeps its pyramid in this form so
/// downsampling does not re-quantize.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  static Plane FromImage(const GrayImage& image);
  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

/// Normalized Gaussian taps of length params.window_side.
std::vector<double> GaussianWindow(const MsSsimParams& params);

ScaleComponents SsimScale(const Plane& x, const Plane& y,
                          const MsSsimParams& params);
ScaleComponents SsimScale(const GrayImage& x, const GrayImage& y,
                          const MsSsimParams& params = {});

/// 2x2 box average followed by decimation; odd trailing rows/columns drop.
Plane Downsample2x(const Plane& plane);

/// Number of pyramid levels whose smaller side is still >= the window side,
/// capped at params.max_scales.
int EffectiveScales(int width, int height, const MsSsimParams& params);

double MsSsim(const GrayImage& x, const GrayImage& y,
              const MsSsimParams& params = {});

struct PairSamplingSpec {
  std::size_t n_pairs = 670;
  std::uint64_t seed = 0;
};

struct PairScore {
  std::size_t first = 0;
  std::size_t second = 0;
  double score = 0.0;
};

struct DatasetMsSsim {
  double mean = 0.0;
  std::vector<PairScore> pairs;
};

/// Draws n_pairs index pairs (first < second) uniformly with replacement
/// across pairs. Depends only on (count, spec).
std::vector<std::pair<std::size_t, std::size_t>> SamplePairs(
    std::size_t count, const PairSamplingSpec& spec);

/// Mean MS-SSIM over sampled pairs. Pairs are drawn up front and the mean is
/// accumulated in pair order, so the result does not depend on `threads`.
DatasetMsSsim DatasetMsSsimScore(const Dataset& dataset,
                                 const PairSamplingSpec& spec,
                                 const MsSsimParams& params = {},
                                 int threads = 0);

/// CSV with header "first,second,first_path,second_path,score".
std::string FormatPairCsv(const Dataset& dataset, const DatasetMsSsim& result);
void WritePairCsv(const Dataset& dataset, const DatasetMsSsim& result,
                  const std::filesystem::path& path);

}  // namespace diverscope

#endif  // DIVERSCOPE_MSSSIM_HPP_
