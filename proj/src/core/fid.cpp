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

#include "diverscope/fid.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "diverscope/error.hpp"
#include "diverscope/matrix_io.hpp"

namespace diverscope {

namespace {

constexpr double kSymmetryTolerance = 1e-8;
constexpr double kEigenFloor = 1e-8;

std::string Dims(Eigen::Index rows, Eigen::Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

}  // namespace

FeatureMatrix::FeatureMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (!values_.allFinite()) {
    Fail(ErrorCode::kNumeric, "feature matrix contains non-finite values");
  }
}

GaussianStats FitGaussian(const FeatureMatrix& features) {
  const Eigen::Index n = features.rows();
  if (n < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "Gaussian fit needs at least 2 samples, got " + std::to_string(n));
  }
  GaussianStats stats;
  stats.mean = features.values().colwise().mean().transpose();
  const Eigen::MatrixXd centered =
      features.values().rowwise() - stats.mean.transpose();
  const Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(n - 1);
  stats.cov = 0.5 * (cov + cov.transpose());
  return stats;
}

Eigen::MatrixXd MatrixSqrtPsd(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    Fail(ErrorCode::kInvalidArgument,
         "matrix square root needs a square matrix, got " +
             Dims(matrix.rows(), matrix.cols()));
  }
  if (matrix.size() == 0) return matrix;
  if (!matrix.allFinite()) {
    Fail(ErrorCode::kNumeric, "matrix contains non-finite values");
  }
  const double magnitude = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  const double asymmetry = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > kSymmetryTolerance * magnitude) {
    Fail(ErrorCode::kInvalidArgument,
         "matrix is not symmetric (max |A - A^T| = " +
             std::to_string(asymmetry) + ")");
  }
  const Eigen::MatrixXd symmetric = 0.5 * (matrix + matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric);
  if (solver.info() != Eigen::Success) {
    Fail(ErrorCode::kNumeric, "symmetric eigensolver did not converge");
  }
  Eigen::VectorXd eigenvalues = solver.eigenvalues();
  const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) < -kEigenFloor * scale) {
      Fail(ErrorCode::kNumeric,
           "matrix is not positive semi-definite (eigenvalue " +
               std::to_string(eigenvalues(i)) + ")");
    }
    eigenvalues(i) = std::sqrt(std::max(0.0, eigenvalues(i)));
  }
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  return vectors * eigenvalues.asDiagonal() * vectors.transpose();
}

double FrechetDistance(const GaussianStats& a, const GaussianStats& b) {
  const Eigen::Index d = a.mean.size();
  if (b.mean.size() != d || a.cov.rows() != d || a.cov.cols() != d ||
      b.cov.rows() != d || b.cov.cols() != d) {
    Fail(ErrorCode::kInvalidArgument,
         "feature dimensions differ: " + std::to_string(a.mean.size()) +
             " vs " + std::to_string(b.mean.size()));
  }
  const Eigen::MatrixXd sqrt_a = MatrixSqrtPsd(a.cov);
  const Eigen::MatrixXd middle = sqrt_a * b.cov * sqrt_a;
  const double cross_trace =
      MatrixSqrtPsd(0.5 * (middle + middle.transpose())).trace();
  const double distance = (a.mean - b.mean).squaredNorm() + a.cov.trace() +
                          b.cov.trace() - 2.0 * cross_trace;
  return std::max(0.0, distance);
}

Eigen::VectorXd PixelFeatures(const GrayImage& image) {
  constexpr int kGrid = 8;
  if (image.empty()) Fail(ErrorCode::kInvalidArgument, "empty image");
  const int w = image.width();
  const int h = image.height();
  Eigen::VectorXd features(kGrid * kGrid);
  for (int gy = 0; gy < kGrid; ++gy) {
    const int y0 = std::min(gy * h / kGrid, h - 1);
    const int y1 = std::max(y0 + 1, (gy + 1) * h / kGrid);
    for (int gx = 0; gx < kGrid; ++gx) {
      const int x0 = std::min(gx * w / kGrid, w - 1);
      const int x1 = std::max(x0 + 1, (gx + 1) * w / kGrid);
      double sum = 0.0;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) sum += image.at(x, y);
      }
      const double count = static_cast<double>((y1 - y0) * (x1 - x0));
      features(gy * kGrid + gx) = sum / (count * 255.0);
    }
  }
  return features;
}

FeatureMatrix PixelFeatures(const Dataset& dataset) {
  if (dataset.empty()) Fail(ErrorCode::kInvalidArgument, "dataset has no items");
  Eigen::MatrixXd values(static_cast<Eigen::Index>(dataset.size()), 64);
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    values.row(static_cast<Eigen::Index>(i)) =
        PixelFeatures(dataset.image(i)).transpose();
  }
  return FeatureMatrix(std::move(values));
}

FeatureMatrix LoadFeatures(const std::filesystem::path& path) {
  return FeatureMatrix(LoadMatrix(path));
}

double FidScore(const FeatureMatrix& real, const FeatureMatrix& synth) {
  if (real.cols() != synth.cols()) {
    Fail(ErrorCode::kInvalidArgument,
         "feature dimensions differ: real d=" + std::to_string(real.cols()) +
             ", synthetic d=" + std::to_string(synth.cols()));
  }
  return FrechetDistance(FitGaussian(real), FitGaussian(synth));
}

}  // namespace diverscope
