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


#include "splkit/color.h"

#include <algorithm>

#include "splkit/errors.h"

namespace splkit {

ImageBuffer RgbToIntensity(const ImageBuffer& rgb) {
  Require(rgb.channels() == 3, "intensity conversion needs a 3-channel image");
  ImageBuffer out(rgb.width(), rgb.height(), 1);
  auto r = rgb.plane(0), g = rgb.plane(1), b = rgb.plane(2);
  auto dst = out.plane(0);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = (r[i] + g[i] + b[i]) / 3.0;
  }
  return out;
}

ImageBuffer RgbToCbCr(const ImageBuffer& rgb) {
  Require(rgb.channels() == 3, "chroma conversion needs a 3-channel image");
  ImageBuffer out(rgb.width(), rgb.height(), 2);
  auto r = rgb.plane(0), g = rgb.plane(1), b = rgb.plane(2);
  auto cb = out.plane(0), cr = out.plane(1);
  for (std::size_t i = 0; i < cb.size(); ++i) {
    cb[i] = kCbFromRgb[0] * r[i] + kCbFromRgb[1] * g[i] +
            kCbFromRgb[2] * b[i] + 0.5;
    cr[i] = kCrFromRgb[0] * r[i] + kCrFromRgb[1] * g[i] +
            kCrFromRgb[2] * b[i] + 0.5;
  }
  return out;
}

ImageBuffer IntensityOf(const ImageBuffer& img) {
  if (img.channels() == 1) return img;
  return RgbToIntensity(img);
}

ImageBuffer ToRgb(const ImageBuffer& img) {
  if (img.channels() == 3) return img;
  Require(img.channels() == 1, "only 1- or 3-channel images convert to RGB");
  ImageBuffer out(img.width(), img.height(), 3);
  for (int c = 0; c < 3; ++c) {
    std::ranges::copy(img.plane(0), out.plane(c).begin());
  }
  return out;
}

}  // namespace splkit
