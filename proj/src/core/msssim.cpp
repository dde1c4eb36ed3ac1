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

#include "diverscope/msssim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "diverscope/error.hpp"
#include "diverscope/parallel.hpp"
#include "diverscope/random.hpp"

namespace diverscope {

namespace {

// Valid-region separable filtering: output is (w - k + 1) x (h - k + 1).
Plane FilterValid(const Plane& in, const std::vector<double>& taps) {
  const int k = static_cast<int>(taps.size());
  const int ow = in.width - k + 1;
  const int oh = in.height - k + 1;
  std::vector<double> horizontal(static_cast<std::size_t>(ow) * in.height);
  for (int y = 0; y < in.height; ++y) {
    const double* row = &in.values[static_cast<std::size_t>(y) * in.width];
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += taps[t] * row[x + t];
      horizontal[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  Plane out{ow, oh, std::vector<double>(static_cast<std::size_t>(ow) * oh)};
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) {
        acc += taps[t] * horizontal[static_cast<std::size_t>(y + t) * ow + x];
      }
      out.values[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  return out;
}

Plane Product(const Plane& a, const Plane& b) {
  Plane out{a.width, a.height, std::vector<double>(a.values.size())};
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    out.values[i] = a.values[i] * b.values[i];
  }
  return out;
}

void CheckPair(int xw, int xh, int yw, int yh, const MsSsimParams& params) {
  if (xw != yw || xh != yh) {
    Fail(ErrorCode::kInvalidArgument,
         "image dimensions differ: " + std::to_string(xw) + "x" +
             std::to_string(xh) + " vs " + std::to_string(yw) + "x" +
             std::to_string(yh));
  }
  if (xw < params.window_side || xh < params.window_side) {
    Fail(ErrorCode::kInvalidArgument,
         "image " + std::to_string(xw) + "x" + std::to_string(xh) +
             " is smaller than the " + std::to_string(params.window_side) +
             "-pixel window");
  }
}

}  // namespace

void Validate(const MsSsimParams& params) {
  if (params.window_side < 1 || params.window_side % 2 == 0) {
    Fail(ErrorCode::kInvalidArgument, "window side must be odd and positive");
  }
  if (!(params.sigma > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "window sigma must be positive");
  }
  if (params.max_scales < 1 ||
      params.weights.size() < static_cast<std::size_t>(params.max_scales)) {
    Fail(ErrorCode::kInvalidArgument, "need one weight per scale");
  }
  for (int j = 0; j < params.max_scales; ++j) {
    if (!(params.weights[j] > 0.0) || !std::isfinite(params.weights[j])) {
      Fail(ErrorCode::kInvalidArgument, "scale weights must be positive");
    }
  }
}

Plane Plane::FromImage(const GrayImage& image) {
  Plane plane{image.width(), image.height(), {}};
  plane.values.assign(image.pixels().begin(), image.pixels().end());
  return plane;
}

std::vector<double> GaussianWindow(const MsSsimParams& params) {
  const int side = params.window_side;
  const double center = (side - 1) / 2.0;
  std::vector<double> taps(static_cast<std::size_t>(side));
  for (int i = 0; i < side; ++i) {
    const double d = i - center;
    taps[i] = std::exp(-(d * d) / (2.0 * params.sigma * params.sigma));
  }
  const double sum = std::accumulate(taps.begin(), taps.end(), 0.0);
  for (auto& t : taps) t /= sum;
  return taps;
}

ScaleComponents SsimScale(const Plane& x, const Plane& y,
                          const MsSsimParams& params) {
  CheckPair(x.width, x.height, y.width, y.height, params);
  const std::vector<double> taps = GaussianWindow(params);
  const Plane mu_x = FilterValid(x, taps);
  const Plane mu_y = FilterValid(y, taps);
  const Plane xx = FilterValid(Product(x, x), taps);
  const Plane yy = FilterValid(Product(y, y), taps);
  const Plane xy = FilterValid(Product(x, y), taps);

  double sum_l = 0.0;
  double sum_c = 0.0;
  double sum_s = 0.0;
  const std::size_t count = mu_x.values.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double mx = mu_x.values[i];
    const double my = mu_y.values[i];
    const double var_x = std::max(0.0, xx.values[i] - mx * mx);
    const double var_y = std::max(0.0, yy.values[i] - my * my);
    const double cov = xy.values[i] - mx * my;
    const double sd_xy = std::sqrt(var_x) * std::sqrt(var_y);
    sum_l += (2.0 * (mx * my) + params.c1) / (mx * mx + my * my + params.c1);
    sum_c += (2.0 * sd_xy + params.c2) / (var_x + var_y + params.c2);
    sum_s += (cov + params.c3) / (sd_xy + params.c3);
  }
  const auto n = static_cast<double>(count);
  return {sum_l / n, sum_c / n, sum_s / n};
}

ScaleComponents SsimScale(const GrayImage& x, const GrayImage& y,
                          const MsSsimParams& params) {
  Validate(params);
  return SsimScale(Plane::FromImage(x), Plane::FromImage(y), params);
}

Plane Downsample2x(const Plane& plane) {
  const int ow = plane.width / 2;
  const int oh = plane.height / 2;
  Plane out{ow, oh, std::vector<double>(static_cast<std::size_t>(ow) * oh)};
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      out.values[static_cast<std::size_t>(y) * ow + x] =
          (plane.at(2 * x, 2 * y) + plane.at(2 * x + 1, 2 * y) +
           plane.at(2 * x, 2 * y + 1) + plane.at(2 * x + 1, 2 * y + 1)) *
          0.25;
    }
  }
  return out;
}

int EffectiveScales(int width, int height, const MsSsimParams& params) {
  int scales = 0;
  int w = width;
  int h = height;
  while (scales < params.max_scales && w >= params.window_side &&
         h >= params.window_side) {
    ++scales;
    w /= 2;
    h /= 2;
  }
  return scales;
}

double MsSsim(const GrayImage& x, const GrayImage& y,
              const MsSsimParams& params) {
  Validate(params);
  CheckPair(x.width(), x.height(), y.width(), y.height(), params);
  const int scales = EffectiveScales(x.width(), x.height(), params);

  double weight_sum = 0.0;
  for (int j = 0; j < scales; ++j) weight_sum += params.weights[j];

  Plane px = Plane::FromImage(x);
  Plane py = Plane::FromImage(y);
  double result = 1.0;
  for (int j = 0; j < scales; ++j) {
    if (j > 0) {
      px = Downsample2x(px);
      py = Downsample2x(py);
    }
    const ScaleComponents sc = SsimScale(px, py, params);
    const double weight = params.weights[j] / weight_sum;
    const double cs = std::max(0.0, sc.contrast * sc.structure);
    result *= std::pow(cs, weight);
    if (j == scales - 1) result *= std::pow(sc.luminance, weight);
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> SamplePairs(
    std::size_t count, const PairSamplingSpec& spec) {
  if (count < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "pair sampling needs at least 2 images, got " + std::to_string(count));
  }
  if (spec.n_pairs < 1) Fail(ErrorCode::kInvalidArgument, "n_pairs must be >= 1");
  Rng rng(spec.seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(spec.n_pairs);
  for (std::size_t p = 0; p < spec.n_pairs; ++p) {
    const auto i = static_cast<std::size_t>(rng.Below(count));
    auto j = static_cast<std::size_t>(rng.Below(count - 1));
    if (j >= i) ++j;
    pairs.emplace_back(std::min(i, j), std::max(i, j));
  }
  return pairs;
}

DatasetMsSsim DatasetMsSsimScore(const Dataset& dataset,
                                 const PairSamplingSpec& spec,
                                 const MsSsimParams& params, int threads) {
  Validate(params);
  const auto pairs = SamplePairs(dataset.size(), spec);
  DatasetMsSsim result;
  result.pairs.resize(pairs.size());
  ParallelFor(pairs.size(), threads, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    result.pairs[p] = {i, j, MsSsim(dataset.image(i), dataset.image(j), params)};
  });
  double sum = 0.0;
  for (const auto& pair : result.pairs) sum += pair.score;
  result.mean = sum / static_cast<double>(result.pairs.size());
  return result;
}

std::string FormatPairCsv(const Dataset& dataset, const DatasetMsSsim& result) {
  std::string csv = "first,second,first_path,second_path,score\n";
  char score[64];
  for (const auto& pair : result.pairs) {
    std::snprintf(score, sizeof(score), "%.12f", pair.score);
    csv += std::to_string(pair.first) + "," + std::to_string(pair.second) +
           "," + dataset.items[pair.first].path.filename().string() + "," +
           dataset.items[pair.second].path.filename().string() + "," + score +
           "\n";
  }
  return csv;
}

void WritePairCsv(const Dataset& dataset, const DatasetMsSsim& result,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot write " + path.string());
  out << FormatPairCsv(dataset, result);
  if (!out) Fail(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace diverscope
