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

#ifndef DIVERSCOPE_SIMULATE_HPP_
#define DIVERSCOPE_SIMULATE_HPP_

#include <cstdint>
#include <vector>

#include "diverscope/dataset.hpp"
#include "diverscope/image.hpp"
#include "diverscope/inception.hpp"

namespace diverscope {

/// Parameters of the mode-collapse simulator: n_images drawn round-robin
/// from k_modes fixed templates, each with independent uniform pixel noise.
struct SimSpec {
  int k_modes = 1;
  int n_images = 1;
  int side = 128;
  int noise_amp = 0;  // noise is uniform in [-noise_amp, +noise_amp]
  std::uint64_t seed = 0;
};

void Validate(const SimSpec& spec);

/// The first `count` templates for `seed`. Template t depends only on
/// (seed, t, side), so smaller mode counts use a prefix of larger ones.
/// Templates are pairwise distinct.
std::vector<GrayImage> ModeTemplates(std::uint64_t seed, int count, int side);

/// Image i is template (i mod k_modes) plus noise, clamped to [0, 255].
/// Items are named img_00000.png, img_00001.png, ...
Dataset GenerateModes(const SimSpec& spec);

/// Stand-in classifier over the k templates: row i is the softmax of
/// -MSE(image i, template t) with MSE in raw intensity units (equivalently,
/// the MSE of [0, 1]-scaled intensities at temperature 1/255^2). Fails when
/// the dataset is not consistent with `spec`.
ProbMatrix OracleProbs(const Dataset& dataset, const SimSpec& spec);

}  // namespace diverscope

#endif  // DIVERSCOPE_SIMULATE_HPP_
