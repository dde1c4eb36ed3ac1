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

#ifndef DIVERSCOPE_COLLAPSE_HPP_
#define DIVERSCOPE_COLLAPSE_HPP_

#include <string>

namespace diverscope {

/// Paired real/synthetic scores and the resulting mode-collapse flag.
struct CollapseReport {
  std::string metric;
  double real_score = 0.0;
  double synthetic_score = 0.0;
  double delta = 0.0;  // synthetic - real
  bool collapsed = false;
};

/// Intra-class rule: synthetic images that are more self-similar than the
/// real ones (strictly higher mean MS-SSIM) signal collapse.
CollapseReport DetectIntraCollapse(double real_msssim, double synth_msssim);

/// Inter-class rule: a strictly lower Inception Score for the synthetic set
/// signals collapse. Both scores must be >= 1 - 1e-9.
CollapseReport DetectInterCollapse(double real_is, double synth_is);

}  // namespace diverscope

#endif  // DIVERSCOPE_COLLAPSE_HPP_
