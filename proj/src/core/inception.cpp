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

#include "diverscope/inception.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "diverscope/error.hpp"
#include "diverscope/matrix_io.hpp"

namespace diverscope {

ProbMatrix::ProbMatrix(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.cols() == 0) {
    Fail(ErrorCode::kInvalidArgument, "empty probability matrix");
  }
  for (Eigen::Index r = 0; r < rows_.rows(); ++r) {
    double sum = 0.0;
    for (Eigen::Index c = 0; c < rows_.cols(); ++c) {
      const double p = rows_(r, c);
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        Fail(ErrorCode::kInvalidArgument,
             "row " + std::to_string(r) + ": probability " + std::to_string(p) +
                 " in column " + std::to_string(c) + " is outside [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      Fail(ErrorCode::kInvalidArgument,
           "row " + std::to_string(r) + " sums to " + std::to_string(sum) +
               ", expected 1");
    }
  }
}

IsResult InceptionScore(const ProbMatrix& probs, int n_splits, double epsilon) {
  const Eigen::Index n = probs.rows();
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "empty probability matrix");
  if (n_splits < 1 || n < n_splits) {
    Fail(ErrorCode::kInvalidArgument,
         "need 1 <= splits <= rows, got " + std::to_string(n_splits) +
             " splits for " + std::to_string(n) + " rows");
  }
  if (!(epsilon > 0.0)) Fail(ErrorCode::kInvalidArgument, "epsilon must be > 0");

  const Eigen::MatrixXd& p = probs.values();
  const Eigen::Index block = n / n_splits;
  std::vector<double> scores(static_cast<std::size_t>(n_splits));
  for (int s = 0; s < n_splits; ++s) {
    const Eigen::Index begin = s * block;
    const Eigen::Index end = s == n_splits - 1 ? n : begin + block;
    const Eigen::Index rows = end - begin;
    Eigen::VectorXd marginal = Eigen::VectorXd::Zero(p.cols());
    for (Eigen::Index r = begin; r < end; ++r) marginal += p.row(r).transpose();
    marginal /= static_cast<double>(rows);

    double kl_sum = 0.0;
    for (Eigen::Index r = begin; r < end; ++r) {
      double kl = 0.0;
      for (Eigen::Index c = 0; c < p.cols(); ++c) {
        const double pc = p(r, c);
        if (pc > 0.0) kl += pc * std::log((pc + epsilon) / (marginal(c) + epsilon));
      }
      kl_sum += kl;
    }
    scores[s] = std::exp(kl_sum / static_cast<double>(rows));
  }

  double mean = 0.0;
  for (double v : scores) mean += v;
  mean /= n_splits;
  double var = 0.0;
  for (double v : scores) var += (v - mean) * (v - mean);
  var /= n_splits;
  return {mean, std::sqrt(var), n_splits};
}

ProbMatrix LoadProbs(const std::filesystem::path& path) {
  return ProbMatrix(LoadMatrix(path));
}

}  // namespace diverscope
