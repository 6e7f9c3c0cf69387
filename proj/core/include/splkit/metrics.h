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


#ifndef SPLKIT_METRICS_H_
#define SPLKIT_METRICS_H_

#include "splkit/image.h"

namespace splkit {

// Single-scale SSIM of two 1-channel planes: 11x11 Gaussian window
// (sigma 1.5), K1 = 0.01, K2 = 0.03, dynamic range 1. The SSIM map is
// evaluated where the window fits entirely inside the image and averaged.
// Both sides must be at least 11 pixels.
double Ssim(const ImageBuffer& a, const ImageBuffer& b);

struct MsePsnr {
  double mse = 0.0;
  // 10 log10(1 / mse); +infinity when mse == 0.
  double psnr = 0.0;
};

// Over all channels, dynamic range 1.
MsePsnr ComputeMsePsnr(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace splkit

#endif  // SPLKIT_METRICS_H_
