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

#ifndef DIVERSCOPE_INCEPTION_HPP_
#define DIVERSCOPE_INCEPTION_HPP_

#include <Eigen/Core>

#include <filesystem>

namespace diverscope {

inline constexpr double kRowSumTolerance = 1e-6;

/// n x k class-conditional probabilities p(y|x): entries in [0, 1], rows
/// summing to 1 within kRowSumTolerance.
class ProbMatrix {
 public:
  ProbMatrix() = default;
  explicit ProbMatrix(Eigen::MatrixXd rows);

  const Eigen::MatrixXd& values() const noexcept { return rows_; }
  Eigen::Index rows() const noexcept { return rows_.rows(); }
  Eigen::Index classes() const noexcept { return rows_.cols(); }

 private:
  Eigen::MatrixXd rows_;
};

struct IsResult {
  double mean = 0.0;
  double std = 0.0;  // population std over splits
  int n_splits = 0;
};

/// Inception Score. Rows are cut into `n_splits` contiguous blocks of
/// n / n_splits rows (the last block takes the remainder); each block scores
/// exp(mean_x KL(p(y|x) || p(y))) with p(y) the block's row mean and
/// `epsilon` added inside the log ratio.
IsResult InceptionScore(const ProbMatrix& probs, int n_splits = 10,
                        double epsilon = 1e-12);

/// Reads and validates an FVEC1 or CSV probability file.
ProbMatrix LoadProbs(const std::filesystem::path& path);

}  // namespace diverscope

#endif  // DIVERSCOPE_INCEPTION_HPP_
