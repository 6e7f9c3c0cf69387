// Copyright 2026 The splkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace splkit::testing {
namespace {

struct Window {
  int y0, y1, x0, x1;  // inclusive
};

Window ClippedWindow(const ImageBuffer& img, int radius, int y, int x) {
  return {std::max(0, y - radius), std::min(img.height() - 1, y + radius),
          std::max(0, x - radius), std::min(img.width() - 1, x + radius)};
}

}  // namespace

ImageBuffer RandomImage(std::mt19937_64& rng, int width, int height,
                        int channels, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  ImageBuffer img(width, height, channels);
  for (double& v : img.data()) v = u(rng);
  return img;
}

ImageBuffer TexturedImage(int width, int height, int channels,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.15, 0.15);
  ImageBuffer img(width, height, channels);
  for (int c = 0; c < channels; ++c) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const double base = 0.5 + 0.2 * std::sin(0.21 * x + 0.7 * c) *
                                      std::cos(0.17 * y - 0.3 * c);
        img.at(c, y, x) = std::clamp(base + u(rng), 0.02, 0.98);
      }
    }
  }
  return img;
}

double BruteBoxSumAt(const ImageBuffer& plane, int radius, int y, int x) {
  const Window w = ClippedWindow(plane, radius, y, x);
  double s = 0.0;
  for (int j = w.y0; j <= w.y1; ++j) {
    for (int i = w.x0; i <= w.x1; ++i) s += plane(j, i);
  }
  return s;
}

RidgeFit BruteFitAt(const ImageBuffer& target, const ImageBuffer& base,
                    int radius, double rho, int y, int x) {
  const Window w = ClippedWindow(base, radius, y, x);
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int j = w.y0; j <= w.y1; ++j) {
    for (int i = w.x0; i <= w.x1; ++i) {
      const double xv = base(j, i), yv = target(j, i);
      n += 1;
      sx += xv;
      sy += yv;
      sxx += xv * xv;
      sxy += xv * yv;
    }
  }
  // [sxx + n rho, sx; sx, n] [a; b] = [sxy; sy]
  const double m00 = sxx + n * rho, m01 = sx, m11 = n;
  const double det = m00 * m11 - m01 * m01;
  if (std::abs(det) <= 1e-14 * std::max(1.0, m00 * m11)) {
    return {0.0, sy / n};
  }
  const double a = (sxy * m11 - m01 * sy) / det;
  const double b = (m00 * sy - m01 * sxy) / det;
  return {a, b};
}

double BruteResidualAt(const ImageBuffer& target, const ImageBuffer& base,
                       int radius, double rho, int y, int x) {
  const RidgeFit fit = BruteFitAt(target, base, radius, rho, y, x);
  const Window w = ClippedWindow(base, radius, y, x);
  double sum = 0.0;
  int n = 0;
  for (int j = w.y0; j <= w.y1; ++j) {
    for (int i = w.x0; i <= w.x1; ++i) {
      const double r = fit.a * base(j, i) + fit.b - target(j, i);
      sum += r * r;
      ++n;
    }
  }
  return sum / n;
}

ImageBuffer BruteDirectionalMap(const ImageBuffer& edit,
                                const ImageBuffer& source, int radius,
                                double rho) {
  ImageBuffer out(edit.width(), edit.height(), 1);
  for (int y = 0; y < edit.height(); ++y) {
    for (int x = 0; x < edit.width(); ++x) {
      out(y, x) = BruteResidualAt(source, edit, radius, rho, y, x);
    }
  }
  return out;
}

ImageBuffer BruteGuidedFilter(const ImageBuffer& input, const ImageBuffer& guide,
                              int radius, double eps) {
  const int w = input.width(), h = input.height();
  std::vector<RidgeFit> fits(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      fits[static_cast<std::size_t>(y) * w + x] =
          BruteFitAt(input, guide, radius, eps, y, x);
    }
  }
  ImageBuffer out(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double sum = 0.0;
      int n = 0;
      // Windows centred at k cover (y, x) iff |k - (y, x)|_inf <= radius.
      for (int ky = 0; ky < h; ++ky) {
        for (int kx = 0; kx < w; ++kx) {
          if (std::abs(ky - y) > radius || std::abs(kx - x) > radius) continue;
          const RidgeFit& f = fits[static_cast<std::size_t>(ky) * w + kx];
          sum += f.a * guide(y, x) + f.b;
          ++n;
        }
      }
      out(y, x) = sum / n;
    }
  }
  return out;
}

double BruteSsim(const ImageBuffer& a, const ImageBuffer& b) {
  constexpr int r = 5;
  constexpr double sigma = 1.5;
  constexpr double c1 = 0.0001, c2 = 0.0009;
  double weights[2 * r + 1][2 * r + 1];
  double total = 0.0;
  for (int j = -r; j <= r; ++j) {
    for (int i = -r; i <= r; ++i) {
      weights[j + r][i + r] = std::exp(-(i * i + j * j) / (2 * sigma * sigma));
      total += weights[j + r][i + r];
    }
  }
  double sum = 0.0;
  int count = 0;
  for (int y = r; y < a.height() - r; ++y) {
    for (int x = r; x < a.width() - r; ++x) {
      double ma = 0, mb = 0;
      for (int j = -r; j <= r; ++j) {
        for (int i = -r; i <= r; ++i) {
          const double wt = weights[j + r][i + r] / total;
          ma += wt * a(y + j, x + i);
          mb += wt * b(y + j, x + i);
        }
      }
      double va = 0, vb = 0, cov = 0;
      for (int j = -r; j <= r; ++j) {
        for (int i = -r; i <= r; ++i) {
          const double wt = weights[j + r][i + r] / total;
          const double da = a(y + j, x + i) - ma, db = b(y + j, x + i) - mb;
          va += wt * da * da;
          vb += wt * db * db;
          cov += wt * da * db;
        }
      }
      sum += (2 * ma * mb + c1) * (2 * cov + c2) /
             ((ma * ma + mb * mb + c1) * (va + vb + c2));
      ++count;
    }
  }
  return sum / count;
}

double CentralDifference(const std::function<double(const ImageBuffer&)>& f,
                         const ImageBuffer& x, std::size_t index, double h) {
  ImageBuffer plus = x, minus = x;
  plus.data()[index] += h;
  minus.data()[index] -= h;
  return (f(plus) - f(minus)) / (2.0 * h);
}

}  // namespace splkit::testing
