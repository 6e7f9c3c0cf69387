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


#ifndef SPLKIT_MASK_UPSAMPLE_H_
#define SPLKIT_MASK_UPSAMPLE_H_

#include "splkit/image.h"

namespace splkit {

// Edge-preserving guided filter with a scalar guide. Fits
// input ~= a * guide + b in every clipped window (regularizer `eps`), then
// averages the coefficients of all windows covering each pixel.
ImageBuffer GuidedFilter(const ImageBuffer& input, const ImageBuffer& guide,
                         int radius, double eps);

// 1 where mask >= threshold, else 0.
MaskMap Binarize(const MaskMap& mask, double threshold);

struct UpsampleConfig {
  double binarize_threshold = 0.4;
  int initial_radius = 2;
  int radius_increment = 2;
  double guided_eps = 1e-4;
  // Output width; height follows the coarse aspect ratio. Must equal the
  // coarse width times a power of two. Zero means "the guide's width".
  int target_size = 0;

  void Validate() const;
};

// Binarizes a coarse mask, then repeatedly doubles it with bilinear
// upsampling and sharpens it with a guided filter whose guide is the
// intensity of `guide` resized to the current level. The radius grows by
// radius_increment per level. Output is soft, clamped to [0,1].
MaskMap UpsampleMask(const MaskMap& coarse, const ImageBuffer& guide,
                     const UpsampleConfig& config);

// Number of doublings from `coarse_width` to `target_width`; throws
// ContractViolation unless the ratio is an exact power of two.
int DoublingCount(int coarse_width, int target_width);

}  // namespace splkit

#endif  // SPLKIT_MASK_UPSAMPLE_H_
