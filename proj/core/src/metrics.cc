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


#include "splkit/metrics.h"

#include <array>
#include <cmath>
#include <limits>

#include "splkit/errors.h"

namespace splkit {
namespace {

constexpr int kSsimRadius = 5;
constexpr double kSsimSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

std::array<double, 2 * kSsimRadius + 1> GaussianTaps() {
  std::array<double, 2 * kSsimRadius + 1> taps{};
  double sum = 0.0;
  for (int i = -kSsimRadius; i <= kSsimRadius; ++i) {
    taps[i + kSsimRadius] = std::exp(-(i * i) / (2.0 * kSsimSigma * kSsimSigma));
    sum += taps[i + kSsimRadius];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

// Separable "valid" Gaussian filter: output is (w-10) x (h-10).
ImageBuffer FilterValid(const ImageBuffer& in) {
  static const auto taps = GaussianTaps();
  const int w = in.width(), h = in.height();
  const int ow = w - 2 * kSsimRadius, oh = h - 2 * kSsimRadius;
  ImageBuffer rows(ow, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double s = 0.0;
      for (int t = 0; t < static_cast<int>(taps.size()); ++t) {
        s += taps[t] * in(y, x + t);
      }
      rows(y, x) = s;
    }
  }
  ImageBuffer out(ow, oh, 1);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double s = 0.0;
      for (int t = 0; t < static_cast<int>(taps.size()); ++t) {
        s += taps[t] * rows(y + t, x);
      }
      out(y, x) = s;
    }
  }
  return out;
}

ImageBuffer Product(const ImageBuffer& a, const ImageBuffer& b) {
  ImageBuffer out = a;
  auto o = out.plane(0);
  auto q = b.plane(0);
  for (std::size_t i = 0; i < o.size(); ++i) o[i] *= q[i];
  return out;
}

}  // namespace

double Ssim(const ImageBuffer& a, const ImageBuffer& b) {
  Require(a.channels() == 1 && b.channels() == 1, "SSIM expects 1-channel planes");
  Require(a.SameSize(b), "SSIM inputs differ in size");
  Require(a.width() > 2 * kSsimRadius && a.height() > 2 * kSsimRadius,
          "SSIM needs images of at least 11x11");

  const ImageBuffer mu_a = FilterValid(a);
  const ImageBuffer mu_b = FilterValid(b);
  const ImageBuffer e_aa = FilterValid(Product(a, a));
  const ImageBuffer e_bb = FilterValid(Product(b, b));
  const ImageBuffer e_ab = FilterValid(Product(a, b));

  auto ma = mu_a.plane(0), mb = mu_b.plane(0);
  auto aa = e_aa.plane(0), bb = e_bb.plane(0), ab = e_ab.plane(0);
  double sum = 0.0;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const double va = aa[i] - ma[i] * ma[i];
    const double vb = bb[i] - mb[i] * mb[i];
    const double cov = ab[i] - ma[i] * mb[i];
    sum += ((2.0 * ma[i] * mb[i] + kC1) * (2.0 * cov + kC2)) /
           ((ma[i] * ma[i] + mb[i] * mb[i] + kC1) * (va + vb + kC2));
  }
  return sum / static_cast<double>(ma.size());
}

MsePsnr ComputeMsePsnr(const ImageBuffer& a, const ImageBuffer& b) {
  Require(a.SameShape(b), "MSE inputs must share a shape");
  auto pa = a.data(), pb = b.data();
  double sum = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = pa[i] - pb[i];
    sum += d * d;
  }
  MsePsnr out;
  out.mse = sum / static_cast<double>(pa.size());
  out.psnr = out.mse > 0.0 ? 10.0 * std::log10(1.0 / out.mse)
                           : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace splkit
