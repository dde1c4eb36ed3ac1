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

#ifndef DIVERSCOPE_FID_HPP_
#define DIVERSCOPE_FID_HPP_

#include <Eigen/Core>

#include <filesystem>

#include "diverscope/dataset.hpp"
#include "diverscope/image.hpp"

namespace diverscope {

/// n x d feature activations, one row per image. All values finite.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(Eigen::MatrixXd values);

  const Eigen::MatrixXd& values() const noexcept { return values_; }
  Eigen::Index rows() const noexcept { return values_.rows(); }
  Eigen::Index cols() const noexcept { return values_.cols(); }

 private:
  Eigen::MatrixXd values_;
};

struct GaussianStats {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

/// Column means and unbiased (n - 1) covariance, symmetrized. Needs n >= 2.
GaussianStats FitGaussian(const FeatureMatrix& features);

/// Principal square root of a symmetric positive semi-definite matrix.
/// Eigenvalues in [-1e-8 * scale, 0) are treated as 0, where scale is
/// max(1, largest |eigenvalue|); anything more negative is an error, as is
/// asymmetry beyond 1e-8 * max(1, max |entry|).
Eigen::MatrixXd MatrixSqrtPsd(const Eigen::MatrixXd& matrix);

/// Squared Wasserstein-2 distance between two Gaussians:
/// |mu_a - mu_b|^2 + tr(S_a + S_b - 2 sqrt(sqrt(S_a) S_b sqrt(S_a))).
/// Negative round-off results are clamped to 0.
double FrechetDistance(const GaussianStats& a, const GaussianStats& b);

/// 64-d feature: box average onto an 8x8 grid, intensities scaled to [0, 1].
Eigen::VectorXd PixelFeatures(const GrayImage& image);
FeatureMatrix PixelFeatures(const Dataset& dataset);

/// Reads FVEC1 or CSV features.
FeatureMatrix LoadFeatures(const std::filesystem::path& path);

/// Frechet distance between Gaussians fitted to each feature set.
double FidScore(const FeatureMatrix& real, const FeatureMatrix& synth);

}  // namespace diverscope

#endif  // DIVERSCOPE_FID_HPP_
