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

#ifndef DIVERSCOPE_TESTS_ORACLES_AIIN_GOLDENS_HPP_
#define DIVERSCOPE_TESTS_ORACLES_AIIN_GOLDENS_HPP_

#include "oracles/oracles.hpp"

namespace goldens {

// Goldens frozen from tests/oracles/clahe_oracle.py.
inline const oracle::Pixels kRandom8x8 = {
    210, 118, 70,  19,  138, 160, 0,   49,  157, 237, 109, 153, 208, 51,  243, 237,
    127, 57,  136, 137, 47,  63,  154, 150, 164, 66,  147, 77,  11,  224, 105, 181,
    200, 40,  65,  34,  223, 20,  68,  84,  62,  177, 88,  41,  20,  144, 204, 197,
    115, 0,   166, 172, 93,  183, 165, 54,  197, 117, 77,  53,  103, 130, 231, 26};
inline const oracle::Pixels kRandom8x8Grid2 = {
    238, 102, 55,  6,   132, 174, 0,   51,  204, 255, 87,  168, 210, 60,  255, 238,
    125, 23,  136, 136, 22,  72,  152, 137, 202, 60,  165, 82,  7,   229, 105, 178,
    242, 21,  68,  13,  234, 6,   66,  78,  77,  221, 121, 35,  1,   146, 215, 198,
    153, 0,   184, 189, 108, 187, 164, 36,  238, 170, 111, 49,  119, 133, 255, 18};

inline const oracle::Pixels kLevels8x8 = {
    140, 200, 80,  80,  80,  200, 20,  20,  200, 140, 200, 200, 20,  20,  80,  140,
    80,  200, 20,  200, 20,  80,  140, 140, 80,  20,  20,  80,  80,  20,  20,  80,
    140, 200, 80,  200, 80,  200, 20,  20,  80,  200, 20,  140, 20,  20,  20,  20,
    140, 140, 20,  140, 80,  20,  140, 200, 20,  20,  140, 200, 200, 80,  200, 20};
inline const oracle::Pixels kLevels8x8Grid2T0 = {
    137, 255, 104, 115, 126, 255, 0,   0,   255, 137, 255, 255, 0,   0,   142, 227,
    91,  255, 0,   255, 0,   131, 215, 215, 77,  0,   0,   95,  107, 0,   0,   125,
    158, 255, 70,  255, 95,  255, 0,   0,   50,  255, 0,   156, 0,   0,   0,   0,
    170, 170, 0,   154, 76,  0,   128, 255, 0,   0,   165, 255, 255, 89,  255, 0};
inline const oracle::Pixels kLevels8x8Grid2T20 = {
    238, 255, 221, 221, 221, 255, 204, 204, 255, 238, 255, 255, 204, 204, 221, 238,
    221, 255, 204, 255, 204, 221, 238, 238, 221, 204, 204, 221, 221, 204, 204, 221,
    238, 255, 221, 255, 221, 255, 204, 204, 221, 255, 204, 238, 204, 204, 204, 204,
    238, 238, 204, 238, 221, 204, 238, 255, 204, 204, 238, 255, 255, 221, 255, 204};

// 10x7 with a 3x3 grid: edge windows absorb the remainder pixels.
inline const oracle::Pixels kLevels10x7 = {
    200, 100, 200, 100, 50,  50,  50,  150, 50,  0,   200, 0,   50,  0,
    150, 50,  200, 100, 0,   0,   50,  0,   50,  0,   200, 200, 50,  150,
    200, 100, 200, 50,  100, 0,   200, 0,   50,  100, 150, 50,  50,  0,
    0,   150, 100, 50,  0,   0,   150, 50,  0,   0,   0,   200, 200, 200,
    200, 100, 50,  200, 200, 0,   150, 150, 100, 0,   200, 0,   0,   50};
inline const oracle::Pixels kLevels10x7Grid3T0 = {
    255, 102, 255, 170, 153, 138, 124, 211, 102, 0,   255, 0,   89,  0,
    191, 104, 255, 142, 0,   0,   128, 0,   98,  0,   255, 255, 31,  184,
    255, 115, 255, 139, 127, 0,   255, 0,   14,  95,  195, 19,  112, 0,
    0,   125, 58,  30,  0,   0,   177, 58,  0,   0,   0,   255, 255, 255,
    255, 123, 96,  255, 255, 0,   166, 163, 96,  0,   255, 0,   0,   96};
inline const oracle::Pixels kLevels10x7Grid3T40 = {
    255, 191, 255, 191, 128, 128, 128, 219, 128, 0,   255, 0,   133, 0,
    239, 141, 255, 176, 0,   0,   128, 0,   144, 0,   255, 255, 156, 216,
    255, 179, 255, 139, 189, 0,   255, 0,   165, 187, 221, 153, 160, 0,
    0,   208, 186, 165, 0,   0,   226, 166, 0,   0,   0,   255, 255, 255,
    255, 201, 179, 255, 255, 0,   219, 219, 182, 0,   255, 0,   0,   179};

}  // namespace goldens

#endif  // DIVERSCOPE_TESTS_ORACLES_AIIN_GOLDENS_HPP_
