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


#ifndef SPLKIT_DISTORTION_H_
#define SPLKIT_DISTORTION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "splkit/image.h"

namespace splkit {

enum class DistortionKind { kColorChange, kDarken, kLensBlur, kWhiteNoise, kJitter };

inline constexpr std::array<DistortionKind, 5> kAllDistortionKinds = {
    DistortionKind::kColorChange, DistortionKind::kDarken,
    DistortionKind::kLensBlur, DistortionKind::kWhiteNoise,
    DistortionKind::kJitter};

struct DistortionSpec {
  DistortionKind kind = DistortionKind::kDarken;
  // color_change: hue rotation in half-turns, [0,1]
  // darken: brightness factor, (0,1]
  // lens_blur: disk radius in pixels, [0,64]
  // white_noise: Gaussian standard deviation, [0,1]
  // jitter: maximum displacement in pixels, [0,64]
  double strength = 0.6;
  std::uint64_t seed = 0;

  void Validate() const;
};

std::string_view DistortionName(DistortionKind kind);
std::optional<DistortionKind> ParseDistortionKind(std::string_view name);

// Default strengths: darken 0.6, color_change 0.5, lens_blur 3,
// white_noise 0.1, jitter 3.
DistortionSpec DefaultDistortion(DistortionKind kind, std::uint64_t seed = 0);

// Deterministic given (spec, seed). Requires a 3-channel image.
ImageBuffer ApplyDistortion(const ImageBuffer& img, const DistortionSpec& spec);

}  // namespace splkit

#endif  // SPLKIT_DISTORTION_H_
