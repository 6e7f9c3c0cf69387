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


#include "splkit/mask_upsample.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "splkit/box_filter.h"
#include "splkit/color.h"
#include "splkit/errors.h"
#include "splkit/resample.h"

namespace splkit {

ImageBuffer GuidedFilter(const ImageBuffer& input, const ImageBuffer& guide,
                         int radius, double eps) {
  Require(input.channels() == 1 && guide.channels() == 1,
          "guided filter expects 1-channel input and guide");
  Require(input.SameSize(guide), "guided filter input and guide differ in size");
  Require(radius >= 0, "guided filter radius must be >= 0");
  Require(eps >= 0.0, "guided filter eps must be >= 0");

  const WindowStats s = ComputeWindowStats(guide, input, radius);
  ImageBuffer a(input.width(), input.height(), 1);
  ImageBuffer b(input.width(), input.height(), 1);
  {
    auto v = s.var_p.plane(0), c = s.cov_pq.plane(0);
    auto mg = s.mean_p.plane(0), mi = s.mean_q.plane(0);
    auto pa = a.plane(0), pb = b.plane(0);
    for (std::size_t k = 0; k < pa.size(); ++k) {
      const double den = v[k] + eps;
      pa[k] = den > 0.0 ? c[k] / den : 0.0;
      pb[k] = mi[k] - pa[k] * mg[k];
    }
  }
  // Windows covering pixel i are exactly those centred within its own
  // window, so the coefficient average is another box mean.
  const ImageBuffer sa = BoxSum(a, radius);
  const ImageBuffer sb = BoxSum(b, radius);
  ImageBuffer out(input.width(), input.height(), 1);
  auto cnt = s.count.plane(0), g = guide.plane(0);
  auto pa = sa.plane(0), pb = sb.plane(0);
  auto o = out.plane(0);
  for (std::size_t i = 0; i < o.size(); ++i) {
    o[i] = (pa[i] * g[i] + pb[i]) / cnt[i];
  }
  return out;
}

MaskMap Binarize(const MaskMap& mask, double threshold) {
  Require(threshold > 0.0 && threshold < 1.0,
          "binarize threshold must lie in (0,1)");
  MaskMap out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      out.set(y, x, mask(y, x) >= threshold ? 1.0 : 0.0);
    }
  }
  return out;
}

void UpsampleConfig::Validate() const {
  Require(binarize_threshold > 0.0 && binarize_threshold < 1.0,
          "threshold must lie in (0,1)");
  Require(initial_radius >= 0, "initial radius must be >= 0");
  Require(radius_increment >= 0, "radius increment must be >= 0");
  Require(guided_eps > 0.0 && std::isfinite(guided_eps),
          "guided filter eps must be positive");
  Require(target_size >= 0, "target size must be >= 0");
}

int DoublingCount(int coarse_width, int target_width) {
  Require(coarse_width >= 1 && target_width >= coarse_width,
          "target size " + std::to_string(target_width) +
              " is smaller than the coarse mask width " +
              std::to_string(coarse_width));
  int count = 0;
  long long w = coarse_width;
  while (w < target_width) {
    w *= 2;
    ++count;
  }
  Require(w == target_width,
          "target size " + std::to_string(target_width) +
              " is not the coarse width " + std::to_string(coarse_width) +
              " times a power of two");
  return count;
}

MaskMap UpsampleMask(const MaskMap& coarse, const ImageBuffer& guide,
                     const UpsampleConfig& config) {
  config.Validate();
  Require(guide.channels() == 1 || guide.channels() == 3,
          "guide must have 1 or 3 channels");
  const bool square = coarse.width() == coarse.height();
  const bool same_aspect =
      static_cast<long long>(coarse.width()) * guide.height() ==
      static_cast<long long>(coarse.height()) * guide.width();
  Require(square || same_aspect,
          "coarse mask must be square or share the guide's aspect ratio");
  const int target = config.target_size > 0 ? config.target_size : guide.width();
  const int levels = DoublingCount(coarse.width(), target);

  const ImageBuffer guide_intensity = IntensityOf(guide);
  ImageBuffer m = Binarize(coarse, config.binarize_threshold).ToPlane();
  int radius = config.initial_radius;
  for (int level = 0; level < levels; ++level) {
    const int w = m.width() * 2;
    const int h = m.height() * 2;
    m = ResizeBilinear(m, w, h);
    const ImageBuffer g = ResizeBilinear(guide_intensity, w, h);
    m = GuidedFilter(m, g, radius, config.guided_eps);
    radius += config.radius_increment;
  }
  return MaskMap::FromPlane(m);  // clamps to [0,1]
}

}  // namespace splkit
