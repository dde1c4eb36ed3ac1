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

#include "diverscope/collapse.hpp"

#include <cmath>

#include "diverscope/error.hpp"

namespace diverscope {

namespace {

void RequireFinite(double real, double synth, const char* metric) {
  if (!std::isfinite(real) || !std::isfinite(synth)) {
    Fail(ErrorCode::kNumeric,
         std::string(metric) + " collapse check needs finite scores");
  }
}

}  // namespace

CollapseReport DetectIntraCollapse(double real_msssim, double synth_msssim) {
  RequireFinite(real_msssim, synth_msssim, "MS-SSIM");
  return {"msssim", real_msssim, synth_msssim, synth_msssim - real_msssim,
          synth_msssim > real_msssim};
}

CollapseReport DetectInterCollapse(double real_is, double synth_is) {
  RequireFinite(real_is, synth_is, "IS");
  if (real_is < 1.0 - 1e-9 || synth_is < 1.0 - 1e-9) {
    Fail(ErrorCode::kInvalidArgument, "Inception Scores must be >= 1");
  }
  return {"is", real_is, synth_is, synth_is - real_is, synth_is < real_is};
}

}  // namespace diverscope
