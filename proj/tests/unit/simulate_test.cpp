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

#include <gtest/gtest.h>

#include <set>

#include "diverscope/error.hpp"
#include "diverscope/fid.hpp"
#include "diverscope/msssim.hpp"
#include "test_util.hpp"

namespace diverscope {
namespace {

std::size_t DistinctImages(const Dataset& ds) {
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& item : ds.items) {
    seen.emplace(item.image.pixels().begin(), item.image.pixels().end());
  }
  return seen.size();
}

TEST(GenerateModesTest, SingleModeWithoutNoiseIsTotalCollapse) {
  const Dataset ds = GenerateModes({1, 10, 32, 0, 5});
  ASSERT_EQ(ds.size(), 10u);
  EXPECT_EQ(DistinctImages(ds), 1u);
  EXPECT_NEAR(DatasetMsSsimScore(ds, {30, 1}).mean, 1.0, 1e-12);
}

TEST(GenerateModesTest, ExactModeCountWithoutNoise) {
  const Dataset two = GenerateModes({2, 100, 32, 0, 5});
  EXPECT_EQ(DistinctImages(two), 2u);
  std::size_t copies_of_first = 0;
  for (const auto& item : two.items) copies_of_first += item.image == two.image(0);
  EXPECT_EQ(copies_of_first, 50u);
  for (int k : {3, 10, 100}) {
    EXPECT_EQ(DistinctImages(GenerateModes({k, k * 2, 16, 0, 9})), static_cast<std::size_t>(k));
  }
}

TEST(GenerateModesTest, DeterministicAndSeedSensitive) {
  const SimSpec spec{4, 12, 24, 8, 77};
  const Dataset a = GenerateModes(spec);
  const Dataset b = GenerateModes(spec);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.image(i), b.image(i));
  EXPECT_NE(GenerateModes({4, 12, 24, 8, 78}).image(0), a.image(0));
  EXPECT_EQ(a.items[0].path, "img_00000.png");
}

TEST(GenerateModesTest, TemplatesArePrefixStable) {
  const auto small = ModeTemplates(3, 2, 32);
  const auto large = ModeTemplates(3, 10, 32);
  EXPECT_EQ(small[0], large[0]);
  EXPECT_EQ(small[1], large[1]);
}

TEST(GenerateModesTest, NoiseStaysWithinAmplitude) {
  const SimSpec spec{3, 9, 16, 8, 1};
  const Dataset ds = GenerateModes(spec);
  const auto templates = ModeTemplates(1, 3, 16);
  for (int i = 0; i < 9; ++i) {
    const auto a = ds.image(i).pixels();
    const auto t = templates[i % 3].pixels();
    for (std::size_t p = 0; p < a.size(); ++p) ASSERT_LE(std::abs(a[p] - t[p]), 8);
  }
}

TEST(GenerateModesTest, InvalidSpecs) {
  EXPECT_THROW(GenerateModes({0, 5, 16, 0, 0}), Error);
  EXPECT_THROW(GenerateModes({5, 4, 16, 0, 0}), Error);
  EXPECT_THROW(GenerateModes({1, 4, 16, 65, 0}), Error);
  EXPECT_THROW(GenerateModes({1, 4, 0, 0, 0}), Error);
}

TEST(OracleProbsTest, ZeroNoiseRowsAreNearlyOneHot) {
  const SimSpec spec{10, 40, 32, 0, 2};
  const ProbMatrix p = OracleProbs(GenerateModes(spec), spec);
  ASSERT_EQ(p.classes(), 10);
  for (int r = 0; r < 40; ++r) {
    Eigen::Index arg = 0;
    EXPECT_GT(p.values().row(r).maxCoeff(&arg), 0.99);
    EXPECT_EQ(arg, r % 10);
  }
}

TEST(OracleProbsTest, SingleClassAndBalancedPairScores) {
  const SimSpec one{1, 20, 32, 8, 2};
  const ProbMatrix p1 = OracleProbs(GenerateModes(one), one);
  EXPECT_EQ(p1.values(), Eigen::MatrixXd::Ones(20, 1));
  EXPECT_NEAR(InceptionScore(p1, 10).mean, 1.0, 1e-12);

  const SimSpec two{2, 100, 32, 0, 2};
  EXPECT_NEAR(InceptionScore(OracleProbs(GenerateModes(two), two), 10).mean, 2.0, 0.01);
}

TEST(OracleProbsTest, RejectsForeignDatasets) {
  const SimSpec spec{2, 10, 16, 4, 1};
  const Dataset ds = GenerateModes(spec);
  EXPECT_THROW(OracleProbs(ds, {2, 10, 16, 4, 2}), Error);
  EXPECT_THROW(OracleProbs(ds, {2, 12, 16, 4, 1}), Error);
  EXPECT_THROW(OracleProbs(ds, {2, 10, 17, 4, 1}), Error);
}

TEST(CollapseSensitivityTest, MetricsTrackModeCount) {
  // Frozen orderings at the acceptance configuration (side 64).
  const FeatureMatrix reference = PixelFeatures(GenerateModes({100, 200, 64, 8, 8}));
  double previous_ms = 2.0, previous_fid = 1e300, previous_is = 0.0;
  for (int k : {1, 2, 10, 100}) {
    const SimSpec spec{k, 200, 64, 8, 7};
    const Dataset ds = GenerateModes(spec);
    const double ms = DatasetMsSsimScore(ds, {670, 7}).mean;
    const double fid = FidScore(reference, PixelFeatures(ds));
    EXPECT_LT(ms, previous_ms) << k;
    EXPECT_LT(fid, previous_fid) << k;
    previous_ms = ms;
    previous_fid = fid;
    if (k <= 10) {
      const double is = InceptionScore(OracleProbs(ds, spec), 10).mean;
      EXPECT_GT(is, previous_is) << k;
      EXPECT_NEAR(is, k, 0.01 * k);
      previous_is = is;
    }
  }
}

}  // namespace
}  // namespace diverscope
