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


#ifndef SPLKIT_STRUCTURE_LOSS_H_
#define SPLKIT_STRUCTURE_LOSS_H_

#include "splkit/image.h"

namespace splkit {

struct SplParams {
  // Window is (2*radius+1)^2; the default 5 gives the 11x11 window.
  int radius = 5;
  // Regularizer added to the base variance in the slope of the fit. Zero is
  // accepted for exact-fit checks; a window with zero variance then gets
  // slope 0 (the minimum-norm least-squares solution).
  double rho = 1e-4;
  // Weight of the color term in the total loss.
  double lambda_cpl = 1e-4;

  // Throws ContractViolation on out-of-range fields.
  void Validate() const;
};

// Per-pixel coefficients of target ~= a * base + b over each window.
struct LlmCoefficients {
  ImageBuffer a;
  ImageBuffer b;
};

// A scalar loss together with the per-pixel map it averages.
struct LossValue {
  double value = 0.0;
  ImageBuffer map;
};

struct LossReport {
  double spl = 0.0;
  double cpl = 0.0;
  double total = 0.0;  // spl + lambda_cpl * cpl
  ImageBuffer spl_map;
  ImageBuffer cpl_map;
};

// Optional masks for each loss term. Null means "every pixel, weight 1".
// A mask weights each window by its value at the window centre and the
// scalar becomes sum(mask * map) / sum(mask).
struct LossMasks {
  const MaskMap* structure = nullptr;
  const MaskMap* color = nullptr;

  static LossMasks Both(const MaskMap* mask) { return {mask, mask}; }
};

// Closed-form least-squares fit of `target` from `base` in every clipped
// window: a = cov(base, target) / (var(base) + rho), b = mean(target) -
// a * mean(base).
LlmCoefficients FitLocalLinearModel(const ImageBuffer& target,
                                    const ImageBuffer& base,
                                    const SplParams& params);

// D_k(edit, source): mean squared residual of predicting `source` from
// `edit` with the per-window fit. Not symmetric.
LossValue DirectionalDifference(const ImageBuffer& edit,
                                const ImageBuffer& source,
                                const SplParams& params);

// Symmetric structure loss on 1-channel intensity planes:
// map = D(edit, source) + D(source, edit), scalar = (weighted) mean of map.
// Throws DegenerateMaskError if `mask` has zero mass.
LossValue StructurePreservationLoss(const ImageBuffer& edit,
                                    const ImageBuffer& source,
                                    const SplParams& params,
                                    const MaskMap* mask = nullptr);

// Mean squared (Cb, Cr) difference of two RGB images.
LossValue ColorPreservationLoss(const ImageBuffer& edit,
                                const ImageBuffer& source,
                                const MaskMap* mask = nullptr);

// spl on intensity planes plus lambda * cpl on chroma. One-channel inputs
// have cpl = 0.
LossReport TotalLoss(const ImageBuffer& edit, const ImageBuffer& source,
                     const SplParams& params, const LossMasks& masks = {});

// Exact gradient of TotalLoss(...).total with respect to every sample of
// `edit`, differentiating through the fitted coefficients.
ImageBuffer LossGradient(const ImageBuffer& edit, const ImageBuffer& source,
                         const SplParams& params, const LossMasks& masks = {});

struct LossEvaluation {
  LossReport report;
  ImageBuffer gradient;
};

// TotalLoss and LossGradient in one pass over shared window statistics.
LossEvaluation EvaluateLoss(const ImageBuffer& edit, const ImageBuffer& source,
                            const SplParams& params,
                            const LossMasks& masks = {});

}  // namespace splkit

#endif  // SPLKIT_STRUCTURE_LOSS_H_
