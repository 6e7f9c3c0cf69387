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


#ifndef SPLKIT_COLOR_H_
#define SPLKIT_COLOR_H_

#include "splkit/image.h"

namespace splkit {

// Full-range BT.601 chroma weights with a +0.5 offset, so neutral gray maps
// to (0.5, 0.5).
inline constexpr double kCbFromRgb[3] = {-0.168736, -0.331264, 0.5};
inline constexpr double kCrFromRgb[3] = {0.5, -0.418688, -0.081312};

// HSI intensity: the unweighted mean (R+G+B)/3.
ImageBuffer RgbToIntensity(const ImageBuffer& rgb);

// Two-channel output, channel 0 = Cb, channel 1 = Cr.
ImageBuffer RgbToCbCr(const ImageBuffer& rgb);

// Intensity plane of any image: 3-channel inputs are converted, 1-channel
// inputs are copied.
ImageBuffer IntensityOf(const ImageBuffer& img);

// Replicates a 1-channel image into RGB; 3-channel input is returned as is.
ImageBuffer ToRgb(const ImageBuffer& img);

}  // namespace splkit

#endif  // SPLKIT_COLOR_H_
