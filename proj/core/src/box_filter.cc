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


#include "splkit/box_filter.h"

#include <algorithm>
#include <vector>

#include "splkit/errors.h"

namespace splkit {
namespace {

// out[i] = sum of in[j] for |j - i| <= radius, j in [0, n).
// `prefix` is scratch of size n + 1.
void SlidingSum(const double* in, std::ptrdiff_t in_stride, double* out,
                std::ptrdiff_t out_stride, int n, int radius,
                std::vector<double>& prefix) {
  prefix[0] = 0.0;
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + in[i * in_stride];
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - radius);
    const int hi = std::min(n, i + radius + 1);
    out[i * out_stride] = prefix[hi] - prefix[lo];
  }
}

}  // namespace

ImageBuffer BoxSum(const ImageBuffer& plane, int radius) {
  Require(plane.channels() == 1, "box sum expects a 1-channel plane");
  Require(radius >= 0, "box radius must be non-negative");
  if (radius == 0) return plane;
  const int w = plane.width();
  const int h = plane.height();
  ImageBuffer rows(w, h, 1);
  ImageBuffer out(w, h, 1);
  std::vector<double> prefix(std::max(w, h) + 1);

  const double* src = plane.plane(0).data();
  double* tmp = rows.plane(0).data();
  for (int y = 0; y < h; ++y) {
    SlidingSum(src + static_cast<std::ptrdiff_t>(y) * w, 1,
               tmp + static_cast<std::ptrdiff_t>(y) * w, 1, w, radius, prefix);
  }
  double* dst = out.plane(0).data();
  for (int x = 0; x < w; ++x) {
    SlidingSum(tmp + x, w, dst + x, w, h, radius, prefix);
  }
  return out;
}

ImageBuffer BoxCount(int width, int height, int radius) {
  Require(radius >= 0, "box radius must be non-negative");
  ImageBuffer out(width, height, 1);
  for (int y = 0; y < height; ++y) {
    const int ny = std::min(height, y + radius + 1) - std::max(0, y - radius);
    for (int x = 0; x < width; ++x) {
      const int nx = std::min(width, x + radius + 1) - std::max(0, x - radius);
      out(y, x) = static_cast<double>(nx) * ny;
    }
  }
  return out;
}

WindowStats ComputeWindowStats(const ImageBuffer& p, const ImageBuffer& q,
                               int radius) {
  Require(p.channels() == 1 && q.channels() == 1,
          "window statistics expect 1-channel planes");
  Require(p.SameSize(q), "window statistics need equally sized planes");

  const std::size_t n = p.pixel_count();
  ImageBuffer pp(p.width(), p.height(), 1);
  ImageBuffer qq(p.width(), p.height(), 1);
  ImageBuffer pq(p.width(), p.height(), 1);
  {
    auto ps = p.plane(0), qs = q.plane(0);
    auto a = pp.plane(0), b = qq.plane(0), c = pq.plane(0);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = ps[i] * ps[i];
      b[i] = qs[i] * qs[i];
      c[i] = ps[i] * qs[i];
    }
  }

  WindowStats s;
  s.count = BoxCount(p.width(), p.height(), radius);
  s.mean_p = BoxSum(p, radius);
  s.mean_q = BoxSum(q, radius);
  s.var_p = BoxSum(pp, radius);
  s.var_q = BoxSum(qq, radius);
  s.cov_pq = BoxSum(pq, radius);

  auto cnt = s.count.plane(0);
  auto mp = s.mean_p.plane(0), mq = s.mean_q.plane(0);
  auto vp = s.var_p.plane(0), vq = s.var_q.plane(0), cv = s.cov_pq.plane(0);
  for (std::size_t i = 0; i < n; ++i) {
    mp[i] /= cnt[i];
    mq[i] /= cnt[i];
    vp[i] = std::max(0.0, vp[i] / cnt[i] - mp[i] * mp[i]);
    vq[i] = std::max(0.0, vq[i] / cnt[i] - mq[i] * mq[i]);
    cv[i] = cv[i] / cnt[i] - mp[i] * mq[i];
  }
  return s;
}

}  // namespace splkit
