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


#ifndef SPLKIT_REFINE_H_
#define SPLKIT_REFINE_H_

#include <vector>

#include "splkit/image.h"
#include "splkit/structure_loss.h"

namespace splkit {

struct RefineConfig {
  int iterations = 100;
  double learning_rate = 1.0;
  double momentum = 0.9;
  SplParams spl_params;
  bool record_trace = true;

  void Validate() const;
};

struct RefineTrace {
  // Total loss before the first step and after every step
  // (iterations + 1 entries when recorded).
  std::vector<double> total_loss;
  LossReport initial;
  // Evaluated on the clamped output image.
  LossReport final;
};

struct RefineResult {
  ImageBuffer image;
  RefineTrace trace;
};

// One heavy-ball step: velocity' = momentum * velocity + gradient,
// image' = image - learning_rate * velocity'. Updates both in place.
void MomentumStep(ImageBuffer& image, ImageBuffer& velocity,
                  const ImageBuffer& gradient, const RefineConfig& config);

// Minimizes spl + lambda * cpl of the auxiliary image against `source`,
// starting from `edit` with zero velocity, for exactly config.iterations
// steps. The result is clamped to [0,1] once, after the last step.
RefineResult Refine(const ImageBuffer& source, const ImageBuffer& edit,
                    const MaskMap* mask, const RefineConfig& config);

}  // namespace splkit

#endif  // SPLKIT_REFINE_H_
