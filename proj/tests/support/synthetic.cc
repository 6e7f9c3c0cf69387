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


#include "synthetic.h"

#include <cmath>

namespace splkit::testing {

DiskScene MakeDiskScene(int size, int coarse_size) {
  DiskScene s;
  s.cx = size * 0.52;
  s.cy = size * 0.47;
  s.radius = size * 0.3;
  s.guide = ImageBuffer(size, size, 3);
  s.truth = MaskMap(size, size, 0.0);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double dx = x + 0.5 - s.cx, dy = y + 0.5 - s.cy;
      const bool inside = dx * dx + dy * dy <= s.radius * s.radius;
      s.truth.set(y, x, inside ? 1.0 : 0.0);
      const double rgb[3] = {inside ? 0.15 : 0.85, inside ? 0.2 : 0.8,
                             inside ? 0.25 : 0.75};
      for (int c = 0; c < 3; ++c) s.guide.at(c, y, x) = rgb[c];
    }
  }
  const int block = size / coarse_size;
  s.coarse = MaskMap(coarse_size, coarse_size, 0.0);
  for (int by = 0; by < coarse_size; ++by) {
    for (int bx = 0; bx < coarse_size; ++bx) {
      double sum = 0;
      for (int y = by * block; y < (by + 1) * block; ++y) {
        for (int x = bx * block; x < (bx + 1) * block; ++x) sum += s.truth(y, x);
      }
      s.coarse.set(by, bx, sum / (block * block));
    }
  }
  return s;
}

double IntersectionOverUnion(const MaskMap& a, const MaskMap& b,
                             double threshold) {
  long inter = 0, uni = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      const bool pa = a(y, x) >= threshold, pb = b(y, x) >= threshold;
      inter += pa && pb;
      uni += pa || pb;
    }
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / uni;
}

}  // namespace splkit::testing
