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


#ifndef SPLKIT_RESAMPLE_H_
#define SPLKIT_RESAMPLE_H_

#include "splkit/image.h"

namespace splkit {

// Bilinear resampling with half-pixel-center alignment. Source coordinates
// outside the image are clamped to the border samples. Resizing to the same
// size returns an exact copy.
ImageBuffer ResizeBilinear(const ImageBuffer& img, int out_width,
                           int out_height);

}  // namespace splkit

#endif  // SPLKIT_RESAMPLE_H_
