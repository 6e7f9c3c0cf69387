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


#ifndef SPLKIT_BOX_FILTER_H_
#define SPLKIT_BOX_FILTER_H_

#include "splkit/image.h"

namespace splkit {

// Windowed statistics over (2r+1)^2 square windows clipped to the image
// ("shrinking" windows). Every field is a 1-channel plane.
struct WindowStats {
  ImageBuffer mean_p;
  ImageBuffer mean_q;
  ImageBuffer var_p;  // clamped to >= 0
  ImageBuffer var_q;  // clamped to >= 0
  ImageBuffer cov_pq;
  ImageBuffer count;  // |w_k|, the number of in-bounds pixels
};

// Sum of `plane` over the clipped window around each pixel.
//
// Computed as two separable passes of 1-D prefix-sum differences in double
// precision. A window whose samples are all zero yields exactly 0.0, which
// the masked loss gradient relies on for exact locality.
ImageBuffer BoxSum(const ImageBuffer& plane, int radius);

// Number of in-bounds pixels in each clipped window.
ImageBuffer BoxCount(int width, int height, int radius);

// Window means, variances and covariance of two equally sized planes.
WindowStats ComputeWindowStats(const ImageBuffer& p, const ImageBuffer& q,
                               int radius);

}  // namespace splkit

#endif  // SPLKIT_BOX_FILTER_H_
