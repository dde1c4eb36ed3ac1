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

#ifndef DIVERSCOPE_TESTS_ORACLES_HPP_
#define DIVERSCOPE_TESTS_ORACLES_HPP_

// Independent reference implementations used only by tests. Nothing here
// calls into the library's numerical code; they are written for clarity,
// not speed, and take plain std::vector inputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Pixels = std::vector<int>;           // row-major, 0..255
using Matrix = std::vector<std::vector<double>>;

inline Pixels RandomPixels(std::uint64_t seed, int w, int h, int levels = 256) {
  std::mt19937_64 gen(seed);
  const int step = levels >= 256 ? 1 : 255 / (levels - 1);
  Pixels out(static_cast<std::size_t>(w) * h);
  for (auto& p : out) p = static_cast<int>(gen() % static_cast<std::uint64_t>(levels)) * step;
  return out;
}

// Textbook global histogram equalization of one image, no clipping.
inline Pixels GlobalHe(const Pixels& px) {
  const double n = static_cast<double>(px.size());
  std::vector<double> cdf(256, 0.0);
  for (int v : px) cdf[v] += 1.0;
  for (int v = 1; v < 256; ++v) cdf[v] += cdf[v - 1];
  double cmin = 0.0;
  for (int v = 0; v < 256; ++v) {
    if (cdf[v] > 0.0) {
      cmin = cdf[v];
      break;
    }
  }
  Pixels out(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (cmin == n) {
      out[i] = px[i];
    } else {
      const double mapped = (cdf[px[i]] - cmin) / (n - cmin) * 255.0;
      out[i] = static_cast<int>(std::floor(mapped + 0.5));
    }
  }
  return out;
}

// --- MS-SSIM, direct 2-D windows and two-pass moments ---

struct Image {
  int w = 0;
  int h = 0;
  std::vector<double> v;
  double at(int x, int y) const { return v[static_cast<std::size_t>(y) * w + x]; }
};

inline Image FromPixels(const Pixels& px, int w, int h) {
  Image im{w, h, {}};
  for (int p : px) im.v.push_back(p);
  return im;
}

inline Matrix Gaussian2d(int side, double sigma) {
  Matrix k(side, std::vector<double>(side));
  double total = 0.0;
  const double c = (side - 1) / 2.0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      k[i][j] = std::exp(-((i - c) * (i - c) + (j - c) * (j - c)) / (2 * sigma * sigma));
      total += k[i][j];
    }
  }
  for (auto& row : k) for (auto& e : row) e /= total;
  return k;
}

struct Lcs {
  double l, c, s;
};

inline Lcs SsimComponents(const Image& a, const Image& b) {
  const int side = 11;
  const double c1 = std::pow(0.01 * 255, 2), c2 = std::pow(0.03 * 255, 2), c3 = c2 / 2;
  const Matrix k = Gaussian2d(side, 1.5);
  double sl = 0, sc = 0, ss = 0;
  int count = 0;
  for (int y0 = 0; y0 + side <= a.h; ++y0) {
    for (int x0 = 0; x0 + side <= a.w; ++x0) {
      double ma = 0, mb = 0;
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
          ma += k[i][j] * a.at(x0 + j, y0 + i);
          mb += k[i][j] * b.at(x0 + j, y0 + i);
        }
      double va = 0, vb = 0, cov = 0;
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
          const double da = a.at(x0 + j, y0 + i) - ma;
          const double db = b.at(x0 + j, y0 + i) - mb;
          va += k[i][j] * da * da;
          vb += k[i][j] * db * db;
          cov += k[i][j] * da * db;
        }
      const double sa = std::sqrt(va), sb = std::sqrt(vb);
      sl += (2 * ma * mb + c1) / (ma * ma + mb * mb + c1);
      sc += (2 * sa * sb + c2) / (va + vb + c2);
      ss += (cov + c3) / (sa * sb + c3);
      ++count;
    }
  }
  return {sl / count, sc / count, ss / count};
}

inline Image Halve(const Image& im) {
  Image out{im.w / 2, im.h / 2, {}};
  for (int y = 0; y < out.h; ++y)
    for (int x = 0; x < out.w; ++x)
      out.v.push_back((im.at(2 * x, 2 * y) + im.at(2 * x + 1, 2 * y) +
                       im.at(2 * x, 2 * y + 1) + im.at(2 * x + 1, 2 * y + 1)) / 4.0);
  return out;
}

inline double MsSsim(Image a, Image b) {
  const double base[5] = {0.0448, 0.2856, 0.3001, 0.2363, 0.1333};
  int scales = 0;
  for (int s = std::min(a.w, a.h); scales < 5 && s >= 11; s /= 2) ++scales;
  double total = 0;
  for (int j = 0; j < scales; ++j) total += base[j];
  double log_result = 0.0;
  for (int j = 0; j < scales; ++j) {
    if (j > 0) {
      a = Halve(a);
      b = Halve(b);
    }
    const Lcs r = SsimComponents(a, b);
    const double w = base[j] / total;
    const double cs = r.c * r.s;
    if (cs <= 0) return 0.0;
    log_result += w * std::log(cs);
    if (j == scales - 1) log_result += w * std::log(r.l);
  }
  return std::exp(log_result);
}

// --- Symmetric eigen-decomposition by cyclic Jacobi rotations ---

struct EigenPairs {
  std::vector<double> values;
  Matrix vectors;  // columns are eigenvectors
};

inline EigenPairs Jacobi(Matrix a) {
  const int n = static_cast<int>(a.size());
  Matrix v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  EigenPairs e;
  for (int i = 0; i < n; ++i) e.values.push_back(a[i][i]);
  e.vectors = v;
  return e;
}

inline Matrix Multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix c(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
  return c;
}

inline Matrix SqrtPsd(const Matrix& m) {
  const EigenPairs e = Jacobi(m);
  const std::size_t n = m.size();
  Matrix r(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        r[i][j] += e.vectors[i][k] * std::sqrt(std::max(0.0, e.values[k])) * e.vectors[j][k];
  return r;
}

// Frechet distance via Jacobi: tr(sqrt(S_a S_b)) computed as the sum of the
// square roots of the eigenvalues of sqrt(S_a) S_b sqrt(S_a).
inline double Frechet(const std::vector<double>& mu_a, const Matrix& cov_a,
                      const std::vector<double>& mu_b, const Matrix& cov_b) {
  double dist = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) dist += (mu_a[i] - mu_b[i]) * (mu_a[i] - mu_b[i]);
  const Matrix ra = SqrtPsd(cov_a);
  const Matrix mid = Multiply(Multiply(ra, cov_b), ra);
  Matrix sym = mid;
  for (std::size_t i = 0; i < mid.size(); ++i)
    for (std::size_t j = 0; j < mid.size(); ++j) sym[i][j] = 0.5 * (mid[i][j] + mid[j][i]);
  double cross = 0.0;
  for (double lambda : Jacobi(sym).values) cross += std::sqrt(std::max(0.0, lambda));
  double tr = 0.0;
  for (std::size_t i = 0; i < cov_a.size(); ++i) tr += cov_a[i][i] + cov_b[i][i];
  return dist + tr - 2 * cross;
}

// Two-pass sample covariance with divisor n - 1.
inline std::pair<std::vector<double>, Matrix> MeanCov(const Matrix& rows) {
  const std::size_t n = rows.size(), d = rows[0].size();
  std::vector<double> mu(d, 0.0);
  for (const auto& r : rows) for (std::size_t j = 0; j < d; ++j) mu[j] += r[j];
  for (auto& m : mu) m /= static_cast<double>(n);
  Matrix cov(d, std::vector<double>(d, 0.0));
  for (const auto& r : rows)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) cov[i][j] += (r[i] - mu[i]) * (r[j] - mu[j]);
  for (auto& row : cov) for (auto& e : row) e /= static_cast<double>(n - 1);
  return {mu, cov};
}

}  // namespace oracle

#endif  // DIVERSCOPE_TESTS_ORACLES_HPP_
