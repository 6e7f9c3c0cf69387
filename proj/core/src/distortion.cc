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


#include "splkit/distortion.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "splkit/errors.h"

namespace splkit {
namespace {

// Rotation by `angle` about the gray axis (1,1,1)/sqrt(3). R+G+B is
// invariant, so intensity is unchanged before clamping.
std::array<double, 9> HueRotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = (1.0 - c) / 3.0;
  const double u = s / std::numbers::sqrt3;
  return {c + t, t - u, t + u,
          t + u, c + t, t - u,
          t - u, t + u, c + t};
}

ImageBuffer ColorChange(const ImageBuffer& img, double strength) {
  const auto m = HueRotation(strength * std::numbers::pi);
  ImageBuffer out(img.width(), img.height(), 3);
  auto r = img.plane(0), g = img.plane(1), b = img.plane(2);
  for (int c = 0; c < 3; ++c) {
    auto dst = out.plane(c);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      dst[i] = std::clamp(m[3 * c] * r[i] + m[3 * c + 1] * g[i] +
                              m[3 * c + 2] * b[i],
                          0.0, 1.0);
    }
  }
  return out;
}

ImageBuffer Darken(const ImageBuffer& img, double factor) {
  ImageBuffer out = img;
  for (double& v : out.data()) v *= factor;
  return out;
}

// Normalized disk kernel; taps falling outside the image are dropped and
// the remaining weights renormalized.
ImageBuffer LensBlur(const ImageBuffer& img, double radius) {
  const int r = static_cast<int>(std::floor(radius));
  std::vector<std::pair<int, int>> taps;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      if (dx * dx + dy * dy <= radius * radius) taps.emplace_back(dy, dx);
    }
  }
  ImageBuffer out(img.width(), img.height(), img.channels());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        double sum = 0.0;
        int n = 0;
        for (auto [dy, dx] : taps) {
          const int yy = y + dy, xx = x + dx;
          if (yy < 0 || yy >= img.height() || xx < 0 || xx >= img.width()) {
            continue;
          }
          sum += img.at(c, yy, xx);
          ++n;
        }
        out.at(c, y, x) = sum / n;
      }
    }
  }
  return out;
}

ImageBuffer WhiteNoise(const ImageBuffer& img, double sigma,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  ImageBuffer out = img;
  for (double& v : out.data()) v = std::clamp(v + noise(rng), 0.0, 1.0);
  return out;
}

// Every output pixel copies the input pixel at a random offset in
// [-strength, strength]^2 (rounded, clamped to the border).
ImageBuffer Jitter(const ImageBuffer& img, double strength,
                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(-strength, strength);
  ImageBuffer out(img.width(), img.height(), img.channels());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double dx = offset(rng);
      const double dy = offset(rng);
      const int sx = std::clamp(x + static_cast<int>(std::lround(dx)), 0,
                                img.width() - 1);
      const int sy = std::clamp(y + static_cast<int>(std::lround(dy)), 0,
                                img.height() - 1);
      for (int c = 0; c < img.channels(); ++c) {
        out.at(c, y, x) = img.at(c, sy, sx);
      }
    }
  }
  return out;
}

}  // namespace

void DistortionSpec::Validate() const {
  const double s = strength;
  Require(std::isfinite(s), "distortion strength must be finite");
  switch (kind) {
    case DistortionKind::kColorChange:
      Require(s >= 0.0 && s <= 1.0, "color_change strength must be in [0,1]");
      break;
    case DistortionKind::kDarken:
      Require(s > 0.0 && s <= 1.0, "darken strength must be in (0,1]");
      break;
    case DistortionKind::kLensBlur:
      Require(s >= 0.0 && s <= 64.0, "lens_blur radius must be in [0,64]");
      break;
    case DistortionKind::kWhiteNoise:
      Require(s >= 0.0 && s <= 1.0, "white_noise sigma must be in [0,1]");
      break;
    case DistortionKind::kJitter:
      Require(s >= 0.0 && s <= 64.0, "jitter strength must be in [0,64]");
      break;
  }
}

std::string_view DistortionName(DistortionKind kind) {
  switch (kind) {
    case DistortionKind::kColorChange: return "color_change";
    case DistortionKind::kDarken: return "darken";
    case DistortionKind::kLensBlur: return "lens_blur";
    case DistortionKind::kWhiteNoise: return "white_noise";
    case DistortionKind::kJitter: return "jitter";
  }
  return "unknown";
}

std::optional<DistortionKind> ParseDistortionKind(std::string_view name) {
  for (DistortionKind kind : kAllDistortionKinds) {
    if (DistortionName(kind) == name) return kind;
  }
  return std::nullopt;
}

DistortionSpec DefaultDistortion(DistortionKind kind, std::uint64_t seed) {
  double strength = 0.0;
  switch (kind) {
    case DistortionKind::kColorChange: strength = 0.5; break;
    case DistortionKind::kDarken: strength = 0.6; break;
    case DistortionKind::kLensBlur: strength = 3.0; break;
    case DistortionKind::kWhiteNoise: strength = 0.1; break;
    case DistortionKind::kJitter: strength = 3.0; break;
  }
  return {kind, strength, seed};
}

ImageBuffer ApplyDistortion(const ImageBuffer& img, const DistortionSpec& spec) {
  Require(img.channels() == 3, "distortions expect a 3-channel image");
  spec.Validate();
  switch (spec.kind) {
    case DistortionKind::kColorChange: return ColorChange(img, spec.strength);
    case DistortionKind::kDarken: return Darken(img, spec.strength);
    case DistortionKind::kLensBlur: return LensBlur(img, spec.strength);
    case DistortionKind::kWhiteNoise:
      return WhiteNoise(img, spec.strength, spec.seed);
    case DistortionKind::kJitter: return Jitter(img, spec.strength, spec.seed);
  }
  throw ContractViolation("unknown distortion kind");
}

}  // namespace splkit
