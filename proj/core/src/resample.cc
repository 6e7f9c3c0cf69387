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


#include "splkit/resample.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "splkit/errors.h"

namespace splkit {
namespace {

struct Tap {
  int lo;
  int hi;
  double frac;  // weight of `hi`
};

// Half-pixel-center mapping from output to input coordinates along one axis.
std::vector<Tap> AxisTaps(int in_size, int out_size) {
  std::vector<Tap> taps(out_size);
  const double scale = static_cast<double>(in_size) / out_size;
  for (int o = 0; o < out_size; ++o) {
    double src = (o + 0.5) * scale - 0.5;
    src = std::clamp(src, 0.0, static_cast<double>(in_size - 1));
    int lo = static_cast<int>(std::floor(src));
    int hi = std::min(lo + 1, in_size - 1);
    taps[o] = {lo, hi, src - lo};
  }
  return taps;
}

}  // namespace

ImageBuffer ResizeBilinear(const ImageBuffer& img, int out_width,
                           int out_height) {
  Require(out_width >= 1 && out_height >= 1,
          "resize target must be at least 1x1");
  if (out_width == img.width() && out_height == img.height()) return img;

  const auto xs = AxisTaps(img.width(), out_width);
  const auto ys = AxisTaps(img.height(), out_height);
  ImageBuffer out(out_width, out_height, img.channels());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < out_height; ++y) {
      const Tap& ty = ys[y];
      for (int x = 0; x < out_width; ++x) {
        const Tap& tx = xs[x];
        double top = (1.0 - tx.frac) * img.at(c, ty.lo, tx.lo) +
                     tx.frac * img.at(c, ty.lo, tx.hi);
        double bottom = (1.0 - tx.frac) * img.at(c, ty.hi, tx.lo) +
                        tx.frac * img.at(c, ty.hi, tx.hi);
        out.at(c, y, x) = (1.0 - ty.frac) * top + ty.frac * bottom;
      }
    }
  }
  return out;
}

}  // namespace splkit
