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


#include "splkit/refine.h"

#include <algorithm>
#include <cmath>

#include "splkit/errors.h"

namespace splkit {

void RefineConfig::Validate() const {
  Require(iterations >= 0, "iterations must be >= 0");
  Require(learning_rate > 0.0 && std::isfinite(learning_rate),
          "learning rate must be positive");
  Require(momentum >= 0.0 && momentum < 1.0, "momentum must be in [0,1)");
  spl_params.Validate();
}

void MomentumStep(ImageBuffer& image, ImageBuffer& velocity,
                  const ImageBuffer& gradient, const RefineConfig& config) {
  Require(image.SameShape(velocity) && image.SameShape(gradient),
          "image, velocity and gradient must share a shape");
  auto x = image.data();
  auto v = velocity.data();
  auto g = gradient.data();
  for (std::size_t i = 0; i < x.size(); ++i) {
    v[i] = config.momentum * v[i] + g[i];
    x[i] -= config.learning_rate * v[i];
  }
}

RefineResult Refine(const ImageBuffer& source, const ImageBuffer& edit,
                    const MaskMap* mask, const RefineConfig& config) {
  config.Validate();
  const LossMasks masks = LossMasks::Both(mask);

  RefineResult result;
  result.image = edit;
  ImageBuffer velocity(edit.width(), edit.height(), edit.channels(), 0.0);
  for (int it = 0; it < config.iterations; ++it) {
    LossEvaluation eval =
        EvaluateLoss(result.image, source, config.spl_params, masks);
    if (it == 0) result.trace.initial = eval.report;
    if (config.record_trace) {
      result.trace.total_loss.push_back(eval.report.total);
    }
    MomentumStep(result.image, velocity, eval.gradient, config);
  }

  if (config.record_trace) {
    result.trace.total_loss.push_back(
        TotalLoss(result.image, source, config.spl_params, masks).total);
  }
  for (double& v : result.image.data()) v = std::clamp(v, 0.0, 1.0);
  result.trace.final =
      TotalLoss(result.image, source, config.spl_params, masks);
  if (config.iterations == 0) result.trace.initial = result.trace.final;
  return result;
}

}  // namespace splkit
