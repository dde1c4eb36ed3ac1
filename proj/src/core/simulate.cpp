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

#include "diverscope/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "diverscope/error.hpp"
#include "diverscope/random.hpp"

namespace diverscope {

namespace {

constexpr std::uint64_t kTemplateStream = 0x7465'6D70;  // "temp"
constexpr std::uint64_t kNoiseStream = 0x6E6F'6973;     // "nois"
constexpr int kCosines = 3;

GrayImage DrawTemplate(Rng& rng, int side) {
  struct Wave {
    double amplitude;
    double fx;
    double fy;
    double phase;
  };
  Wave waves[kCosines];
  double amplitude_sum = 0.0;
  for (auto& wave : waves) {
    // 0.5 to 3 cycles across the image in a random direction.
    const double cycles = 0.5 + 2.5 * rng.Unit();
    const double angle = 2.0 * std::numbers::pi * rng.Unit();
    wave.amplitude = 0.5 + 0.5 * rng.Unit();
    wave.fx = cycles * std::cos(angle);
    wave.fy = cycles * std::sin(angle);
    wave.phase = 2.0 * std::numbers::pi * rng.Unit();
    amplitude_sum += wave.amplitude;
  }
  GrayImage image(side, side);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      double v = 0.0;
      for (const auto& wave : waves) {
        v += wave.amplitude *
             std::cos(2.0 * std::numbers::pi * (wave.fx * x + wave.fy * y) / side +
                      wave.phase);
      }
      const double level = 127.5 + 127.5 * v / amplitude_sum;
      image.at(x, y) =
          static_cast<std::uint8_t>(std::clamp(std::round(level), 0.0, 255.0));
    }
  }
  return image;
}

double MeanSquaredError(const GrayImage& a, const GrayImage& b) {
  double sum = 0.0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = static_cast<double>(pa[i]) - pb[i];
    sum += d * d;
  }
  return sum / static_cast<double>(pa.size());
}

}  // namespace

void Validate(const SimSpec& spec) {
  if (spec.k_modes < 1) Fail(ErrorCode::kInvalidArgument, "k_modes must be >= 1");
  if (spec.n_images < spec.k_modes) {
    Fail(ErrorCode::kInvalidArgument, "n_images must be >= k_modes");
  }
  if (spec.side < 1) Fail(ErrorCode::kInvalidArgument, "side must be >= 1");
  if (spec.noise_amp < 0 || spec.noise_amp > 64) {
    Fail(ErrorCode::kInvalidArgument, "noise_amp must be in [0, 64]");
  }
}

std::vector<GrayImage> ModeTemplates(std::uint64_t seed, int count, int side) {
  std::vector<GrayImage> templates;
  templates.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      Rng rng(SubstreamSeed(seed, kTemplateStream + (attempt << 32),
                            static_cast<std::uint64_t>(t)));
      GrayImage candidate = DrawTemplate(rng, side);
      if (std::find(templates.begin(), templates.end(), candidate) ==
          templates.end()) {
        templates.push_back(std::move(candidate));
        break;
      }
      if (attempt > 1000) {
        Fail(ErrorCode::kInvalidArgument,
             "cannot draw " + std::to_string(count) + " distinct " +
                 std::to_string(side) + "x" + std::to_string(side) +
                 " templates");
      }
    }
  }
  return templates;
}

Dataset GenerateModes(const SimSpec& spec) {
  Validate(spec);
  const std::vector<GrayImage> templates =
      ModeTemplates(spec.seed, spec.k_modes, spec.side);
  std::vector<DatasetItem> items;
  items.reserve(static_cast<std::size_t>(spec.n_images));
  char name[32];
  for (int i = 0; i < spec.n_images; ++i) {
    GrayImage image = templates[static_cast<std::size_t>(i % spec.k_modes)];
    if (spec.noise_amp > 0) {
      Rng rng(SubstreamSeed(spec.seed, kNoiseStream, static_cast<std::uint64_t>(i)));
      for (auto& px : image.pixels()) {
        const std::int64_t v = px + rng.Between(-spec.noise_amp, spec.noise_amp);
        px = static_cast<std::uint8_t>(std::clamp<std::int64_t>(v, 0, 255));
      }
    }
    std::snprintf(name, sizeof(name), "img_%05d.png", i);
    items.push_back({name, std::move(image)});
  }
  return MakeDataset("sim_k" + std::to_string(spec.k_modes), std::move(items));
}

ProbMatrix OracleProbs(const Dataset& dataset, const SimSpec& spec) {
  Validate(spec);
  if (dataset.size() != static_cast<std::size_t>(spec.n_images)) {
    Fail(ErrorCode::kInvalidArgument,
         "spec mismatch: dataset has " + std::to_string(dataset.size()) +
             " images, spec says " + std::to_string(spec.n_images));
  }
  const std::vector<GrayImage> templates =
      ModeTemplates(spec.seed, spec.k_modes, spec.side);
  Eigen::MatrixXd probs(spec.n_images, spec.k_modes);
  for (int i = 0; i < spec.n_images; ++i) {
    const GrayImage& image = dataset.image(static_cast<std::size_t>(i));
    const GrayImage& own = templates[static_cast<std::size_t>(i % spec.k_modes)];
    if (image.width() != spec.side || image.height() != spec.side) {
      Fail(ErrorCode::kInvalidArgument,
           "spec mismatch: image " + std::to_string(i) + " is not " +
               std::to_string(spec.side) + "x" + std::to_string(spec.side));
    }
    const auto pi = image.pixels();
    const auto pt = own.pixels();
    for (std::size_t p = 0; p < pi.size(); ++p) {
      if (std::abs(static_cast<int>(pi[p]) - pt[p]) > spec.noise_amp) {
        Fail(ErrorCode::kInvalidArgument,
             "spec mismatch: image " + std::to_string(i) +
                 " is not a noisy copy of template " +
                 std::to_string(i % spec.k_modes));
      }
    }
    Eigen::VectorXd logits(spec.k_modes);
    for (int t = 0; t < spec.k_modes; ++t) {
      logits(t) = -MeanSquaredError(image, templates[static_cast<std::size_t>(t)]);
    }
    const double top = logits.maxCoeff();
    const Eigen::VectorXd weights = (logits.array() - top).exp().matrix();
    probs.row(i) = (weights / weights.sum()).transpose();
  }
  return ProbMatrix(std::move(probs));
}

}  // namespace diverscope
