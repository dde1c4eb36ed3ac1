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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Everything runs single-threaded unless a criterion says otherwise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "diverscope/aiin.hpp"
#include "diverscope/collapse.hpp"
#include "diverscope/fid.hpp"
#include "diverscope/inception.hpp"
#include "diverscope/msssim.hpp"
#include "diverscope/simulate.hpp"
#include "diverscope/sweep.hpp"
#include "oracles/aiin_goldens.hpp"
#include "oracles/oracles.hpp"
#include "sweep_fixture.hpp"
#include "test_util.hpp"

namespace {

using namespace diverscope;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, a, b, c);
  return buffer;
}

oracle::Image AsOracle(const GrayImage& image) {
  return oracle::FromPixels(testutil::ToPixels(image), image.width(), image.height());
}

Eigen::MatrixXd Normal(std::mt19937_64& gen, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = normal(gen);
  return m;
}

GaussianStats OneDim(double mean, double variance) {
  return {Eigen::VectorXd::Constant(1, mean), Eigen::MatrixXd::Constant(1, 1, variance)};
}

Outcome MsSsimIdentitySymmetry() {
  const auto start = Clock::now();
  double worst_identity = 0.0;
  int asymmetric = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GrayImage x = seed % 2 ? testutil::StructuredImage(seed, 128, 128)
                                 : testutil::RandomImage(seed, 128, 128);
    const GrayImage y = testutil::StructuredImage(seed + 1000, 128, 128);
    worst_identity = std::max(worst_identity, std::abs(MsSsim(x, x) - 1.0));
    if (MsSsim(x, y) != MsSsim(y, x)) ++asymmetric;
  }
  const double elapsed = Seconds(start);
  return {worst_identity <= 1e-12 && asymmetric == 0 && elapsed < 60.0,
          Fmt("max |msssim(x,x)-1| = %.3g, asymmetric pairs = %.0f, %.1f s", worst_identity,
              asymmetric, elapsed)};
}

Outcome MsSsimOracle() {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GrayImage x = testutil::StructuredImage(2 * seed + 1, 128, 128);
    const GrayImage y = seed % 4 == 0 ? testutil::RandomImage(seed, 128, 128)
                                      : testutil::StructuredImage(2 * seed + 2, 128, 128);
    worst = std::max(worst, std::abs(MsSsim(x, y) - oracle::MsSsim(AsOracle(x), AsOracle(y))));
  }
  return {worst <= 1e-9, Fmt("max deviation from reference over 20 pairs = %.3g", worst)};
}

Outcome FidAnalytic() {
  const double shift = FrechetDistance(OneDim(0, 1), OneDim(3, 1));
  const double scale = FrechetDistance(OneDim(0, 1), OneDim(0, 4));
  std::mt19937_64 gen(64);
  const FeatureMatrix a(Normal(gen, 500, 64));
  const double self = FidScore(a, a);
  return {std::abs(shift - 9.0) <= 1e-9 && std::abs(scale - 1.0) <= 1e-9 && self <= 1e-6 &&
              self >= 0.0,
          Fmt("shift case %.12f, scale case %.12f, FID(A,A) = %.3g", shift, scale, self)};
}

Outcome SqrtPsd() {
  std::mt19937_64 gen(32);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 32;
    const int rank = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(d));
    const Eigen::MatrixXd b = Normal(gen, d, rank);
    const Eigen::MatrixXd m = b * b.transpose();
    const Eigen::MatrixXd r = MatrixSqrtPsd(m);
    worst = std::max(worst, (r * r - m).norm());
  }
  return {worst < 1e-8, Fmt("max ||RR-M||_F over 100 matrices = %.3g", worst)};
}

Outcome IsExtremes() {
  const double uniform =
      InceptionScore(ProbMatrix(Eigen::MatrixXd::Constant(100, 4, 0.25)), 10).mean;
  Eigen::MatrixXd hot = Eigen::MatrixXd::Zero(100, 2);
  for (int r = 0; r < 100; ++r) hot(r, r % 2) = 1.0;
  const double balanced = InceptionScore(ProbMatrix(hot), 1).mean;
  Eigen::MatrixXd soft(2, 2);
  soft << 0.9, 0.1, 0.1, 0.9;
  const double hand = InceptionScore(ProbMatrix(soft), 1).mean;

  std::mt19937_64 gen(1000);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + static_cast<int>(gen() % 9);
    const int n = 10 + static_cast<int>(gen() % 91);
    std::gamma_distribution<double> gamma(0.05 + (gen() % 100) / 20.0, 1.0);
    Eigen::MatrixXd p(n, k);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < k; ++c) p(r, c) = gamma(gen) + 1e-300;
      p.row(r) /= p.row(r).sum();
    }
    const double is = InceptionScore(ProbMatrix(p), 1 + trial % 5).mean;
    if (!(is >= 1.0 - 1e-9 && is <= k + 1e-9)) ++violations;
  }
  const bool pass = std::abs(uniform - 1.0) <= 1e-9 && std::abs(balanced - 2.0) <= 1e-6 &&
                    std::abs(hand - 1.44494) <= 1e-4 && violations == 0;
  return {pass, Fmt("uniform %.12f, one-hot %.12f, hand case %.6f", uniform, balanced, hand) +
                    Fmt(", bound violations %.0f/1000", violations)};
}

Outcome AiinOracle() {
  int he_mismatches = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const oracle::Pixels px = oracle::RandomPixels(seed, 8, 8);
    const GrayImage out = AiinNormalize(testutil::ToImage(px, 8, 8), {1, 0.0});
    if (testutil::ToPixels(out) != oracle::GlobalHe(px)) ++he_mismatches;
  }
  const bool grid2 =
      testutil::ToPixels(AiinNormalize(testutil::ToImage(goldens::kRandom8x8, 8, 8), {2, 0.0})) ==
      goldens::kRandom8x8Grid2;
  int constant_changes = 0, points = 0;
  for (int grid : {4, 8, 16}) {
    for (double t : {0.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
      ++points;
      for (int level : {0, 93, 255}) {
        const GrayImage flat(128, 128, static_cast<std::uint8_t>(level));
        if (!(AiinNormalize(flat, {grid, t}) == flat)) ++constant_changes;
      }
    }
  }
  return {he_mismatches == 0 && grid2 && constant_changes == 0 && points == 18,
          Fmt("global-HE mismatches %.0f/50, grid-2 golden ", he_mismatches) +
              (grid2 ? "match" : "MISMATCH") +
              Fmt(", constant images changed %.0f over %.0f grid points", constant_changes,
                  points)};
}

Outcome CollapseMonotonicity() {
  const auto start = Clock::now();
  const int side = 64, n = 200, noise = 8;
  // Independently seeded reference, so k=100 is not compared with itself.
  const FeatureMatrix reference = PixelFeatures(GenerateModes({100, n, side, noise, 8}));
  std::vector<double> ms, fid, is;
  for (int k : {1, 2, 10, 100}) {
    const SimSpec spec{k, n, side, noise, 7};
    const Dataset ds = GenerateModes(spec);
    ms.push_back(DatasetMsSsimScore(ds, {670, 7}, {}, 1).mean);
    fid.push_back(FidScore(reference, PixelFeatures(ds)));
    if (k <= 10) is.push_back(InceptionScore(OracleProbs(ds, spec), 10).mean);
  }
  bool pass = true;
  for (int i = 1; i < 4; ++i) pass = pass && ms[i] < ms[i - 1] && fid[i] < fid[i - 1];
  for (int i = 1; i < 3; ++i) pass = pass && is[i] > is[i - 1];
  const double elapsed = Seconds(start);
  pass = pass && elapsed < 300.0;
  return {pass, Fmt("MS-SSIM %.4f > %.4f > %.4f", ms[0], ms[1], ms[2]) +
                    Fmt(" > %.4f; FID %.3f > %.3f", ms[3], fid[0], fid[1]) +
                    Fmt(" > %.3f > %.3f; IS %.3f", fid[2], fid[3], is[0]) +
                    Fmt(" < %.3f < %.3f; ", is[1], is[2]) + Fmt("%.1f s", elapsed)};
}

Outcome SignConventions() {
  // Score pairs whose deltas are +0.04 (intra), -0.74 (inter) and 0.00.
  const CollapseReport intra = DetectIntraCollapse(0.30, 0.34);
  const CollapseReport inter = DetectInterCollapse(2.00, 1.26);
  const CollapseReport flat_intra = DetectIntraCollapse(0.30, 0.30);
  const CollapseReport flat_inter = DetectInterCollapse(1.80, 1.80);
  const bool pass = intra.collapsed && std::abs(intra.delta - 0.04) < 1e-12 &&
                    inter.collapsed && std::abs(inter.delta + 0.74) < 1e-12 &&
                    !flat_intra.collapsed && !flat_inter.collapsed;
  return {pass, Fmt("intra %+.2f -> ", intra.delta) + (intra.collapsed ? "collapsed" : "ok") +
                    Fmt(", inter %+.2f -> ", inter.delta) +
                    (inter.collapsed ? "collapsed" : "ok") + ", zero deltas -> " +
                    (flat_intra.collapsed || flat_inter.collapsed ? "collapsed" : "ok")};
}

Outcome SweepDeterminism() {
  testutil::TempDir dir("acceptance_sweep");
  const auto config = testutil::WriteSweepFixture(dir.path(), 32, 24, 40);
  const SweepSpec spec = LoadSweepConfig(config);
  const auto rows = RunSweepToDirectory(spec, dir / "run1", 1);
  RunSweepToDirectory(spec, dir / "run2", 1);
  RunSweepToDirectory(spec, dir / "run4", 4);
  const std::string first = testutil::ReadFile(dir / "run1" / "report.csv");
  const bool repeat = first == testutil::ReadFile(dir / "run2" / "report.csv");
  const bool threads = first == testutil::ReadFile(dir / "run4" / "report.csv");
  return {repeat && threads && rows.size() == 57 && !first.empty(),
          Fmt("%.0f rows; repeat run ", static_cast<double>(rows.size())) +
              (repeat ? "identical" : "DIFFERS") + ", threads 1 vs 4 " +
              (threads ? "identical" : "DIFFERS")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"msssim-identity-symmetry", MsSsimIdentitySymmetry},
      {"msssim-reference-equivalence", MsSsimOracle},
      {"fid-analytic-cases", FidAnalytic},
      {"matrix-sqrt-psd", SqrtPsd},
      {"is-bounds-and-extremes", IsExtremes},
      {"aiin-reference-equivalence", AiinOracle},
      {"collapse-sensitivity-monotonicity", CollapseMonotonicity},
      {"collapse-sign-conventions", SignConventions},
      {"sweep-determinism", SweepDeterminism},
  };
  const auto start = Clock::now();
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), Seconds(start));
  return failures == 0 ? 0 : 1;
}
