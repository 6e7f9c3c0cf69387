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


#include "splkit/structure_loss.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "splkit/box_filter.h"
#include "splkit/color.h"
#include "splkit/errors.h"

namespace splkit {
namespace {

// Fit of `target` from `base` plus the window statistics the gradient needs.
struct DirectionalFit {
  WindowStats stats;  // p = base, q = target
  ImageBuffer a;
  ImageBuffer map;
};

double Slope(double cov, double var, double rho) {
  const double den = var + rho;
  return den > 0.0 ? cov / den : 0.0;
}

DirectionalFit FitDirection(const ImageBuffer& base, const ImageBuffer& target,
                            const SplParams& params) {
  DirectionalFit fit;
  fit.stats = ComputeWindowStats(base, target, params.radius);
  fit.a = ImageBuffer(base.width(), base.height(), 1);
  fit.map = ImageBuffer(base.width(), base.height(), 1);
  auto v = fit.stats.var_p.plane(0);
  auto w = fit.stats.var_q.plane(0);
  auto c = fit.stats.cov_pq.plane(0);
  auto a = fit.a.plane(0);
  auto d = fit.map.plane(0);
  for (std::size_t k = 0; k < d.size(); ++k) {
    a[k] = Slope(c[k], v[k], params.rho);
    // Residual a*(x - mx) - (y - my) averaged over the window.
    d[k] = std::max(0.0, a[k] * a[k] * v[k] - 2.0 * a[k] * c[k] + w[k]);
  }
  return fit;
}

// Adds d(sum_k weight_k * D_k)/d(base) and /d(target) into the outputs
// (either may be null). Uses the fact that BoxSum is self-adjoint.
void AccumulateDirectionalGradient(const ImageBuffer& base,
                                   const ImageBuffer& target,
                                   const DirectionalFit& fit,
                                   const ImageBuffer& weight, double rho,
                                   int radius, ImageBuffer* d_base,
                                   ImageBuffer* d_target) {
  const int width = base.width(), height = base.height();
  const std::size_t n = base.pixel_count();
  auto v = fit.stats.var_p.plane(0);
  auto mx = fit.stats.mean_p.plane(0);
  auto my = fit.stats.mean_q.plane(0);
  auto cnt = fit.stats.count.plane(0);
  auto a = fit.a.plane(0);
  auto wt = weight.plane(0);

  // Per-window partials of D with respect to var(base), cov and var(target),
  // pre-divided by the window count.
  ImageBuffer alpha(width, height, 1), beta(width, height, 1),
      gamma(width, height, 1);
  ImageBuffer alpha_mx(width, height, 1), beta_mx(width, height, 1),
      beta_my(width, height, 1), gamma_my(width, height, 1);
  {
    auto al = alpha.plane(0), be = beta.plane(0), ga = gamma.plane(0);
    auto al_mx = alpha_mx.plane(0), be_mx = beta_mx.plane(0),
         be_my = beta_my.plane(0), ga_my = gamma_my.plane(0);
    for (std::size_t k = 0; k < n; ++k) {
      const double den = v[k] + rho;
      const double t = den > 0.0 ? v[k] / den : 0.0;
      const double scale = wt[k] / cnt[k];
      al[k] = scale * a[k] * a[k] * (3.0 - 2.0 * t);
      be[k] = scale * a[k] * (2.0 * t - 4.0);
      ga[k] = scale;
      al_mx[k] = al[k] * mx[k];
      be_mx[k] = be[k] * mx[k];
      be_my[k] = be[k] * my[k];
      ga_my[k] = ga[k] * my[k];
    }
  }

  auto x = base.plane(0);
  auto y = target.plane(0);
  if (d_base != nullptr) {
    const ImageBuffer s_al = BoxSum(alpha, radius);
    const ImageBuffer s_al_mx = BoxSum(alpha_mx, radius);
    const ImageBuffer s_be = BoxSum(beta, radius);
    const ImageBuffer s_be_my = BoxSum(beta_my, radius);
    auto out = d_base->plane(0);
    auto p0 = s_al.plane(0), p1 = s_al_mx.plane(0), p2 = s_be.plane(0),
         p3 = s_be_my.plane(0);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] += 2.0 * (x[i] * p0[i] - p1[i]) + (y[i] * p2[i] - p3[i]);
    }
  }
  if (d_target != nullptr) {
    const ImageBuffer s_be = BoxSum(beta, radius);
    const ImageBuffer s_be_mx = BoxSum(beta_mx, radius);
    const ImageBuffer s_ga = BoxSum(gamma, radius);
    const ImageBuffer s_ga_my = BoxSum(gamma_my, radius);
    auto out = d_target->plane(0);
    auto p0 = s_be.plane(0), p1 = s_be_mx.plane(0), p2 = s_ga.plane(0),
         p3 = s_ga_my.plane(0);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] += (x[i] * p0[i] - p1[i]) + 2.0 * (y[i] * p2[i] - p3[i]);
    }
  }
}

// Per-pixel weights w_k with sum_k w_k * map_k equal to the scalar loss.
ImageBuffer LossWeights(int width, int height, const MaskMap* mask) {
  if (mask == nullptr) {
    return ImageBuffer(width, height, 1,
                       1.0 / (static_cast<double>(width) * height));
  }
  const double mass = mask->Mass();
  if (!(mass > 0.0)) throw DegenerateMaskError("mask has zero total weight");
  ImageBuffer w = mask->ToPlane();
  for (double& v : w.data()) v /= mass;
  return w;
}

double WeightedSum(const ImageBuffer& map, const MaskMap* mask) {
  auto m = map.plane(0);
  if (mask == nullptr) {
    double sum = 0.0;
    for (double v : m) sum += v;
    return sum / static_cast<double>(m.size());
  }
  const double mass = mask->Mass();
  if (!(mass > 0.0)) throw DegenerateMaskError("mask has zero total weight");
  auto wt = mask->data();
  double sum = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) sum += wt[i] * m[i];
  return sum / mass;
}

void CheckPlanes(const ImageBuffer& edit, const ImageBuffer& source) {
  Require(edit.channels() == 1 && source.channels() == 1,
          "structure loss expects 1-channel intensity planes");
  Require(edit.SameSize(source),
          "edit and source differ in size: " + std::to_string(edit.width()) +
              "x" + std::to_string(edit.height()) + " vs " +
              std::to_string(source.width()) + "x" +
              std::to_string(source.height()));
}

void CheckMask(const MaskMap* mask, const ImageBuffer& img) {
  if (mask != nullptr) {
    Require(mask->Matches(img), "mask size does not match the image");
  }
}

void CheckPair(const ImageBuffer& edit, const ImageBuffer& source,
               const LossMasks& masks) {
  Require(edit.SameShape(source),
          "edit and source must have identical size and channel count");
  Require(edit.channels() == 1 || edit.channels() == 3,
          "loss inputs must have 1 or 3 channels");
  CheckMask(masks.structure, edit);
  CheckMask(masks.color, edit);
}

LossEvaluation Evaluate(const ImageBuffer& edit, const ImageBuffer& source,
                        const SplParams& params, const LossMasks& masks,
                        bool with_gradient) {
  params.Validate();
  CheckPair(edit, source, masks);
  const int width = edit.width(), height = edit.height();
  const bool rgb = edit.channels() == 3;

  const ImageBuffer edit_i = IntensityOf(edit);
  const ImageBuffer source_i = IntensityOf(source);
  const DirectionalFit forward = FitDirection(edit_i, source_i, params);
  const DirectionalFit reverse = FitDirection(source_i, edit_i, params);

  LossEvaluation out;
  LossReport& r = out.report;
  r.spl_map = forward.map;
  {
    auto dst = r.spl_map.plane(0);
    auto rev = reverse.map.plane(0);
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += rev[k];
  }
  r.spl = WeightedSum(r.spl_map, masks.structure);

  ImageBuffer cb_diff, cr_diff;
  if (rgb) {
    const ImageBuffer ce = RgbToCbCr(edit);
    const ImageBuffer cs = RgbToCbCr(source);
    cb_diff = ce.Channel(0);
    cr_diff = ce.Channel(1);
    r.cpl_map = ImageBuffer(width, height, 1);
    auto db = cb_diff.plane(0), dr = cr_diff.plane(0), m = r.cpl_map.plane(0);
    auto sb = cs.plane(0), sr = cs.plane(1);
    for (std::size_t k = 0; k < m.size(); ++k) {
      db[k] -= sb[k];
      dr[k] -= sr[k];
      m[k] = db[k] * db[k] + dr[k] * dr[k];
    }
    r.cpl = WeightedSum(r.cpl_map, masks.color);
  } else {
    r.cpl_map = ImageBuffer(width, height, 1, 0.0);
    r.cpl = 0.0;
  }
  r.total = r.spl + params.lambda_cpl * r.cpl;
  if (!with_gradient) return out;

  const ImageBuffer w_spl = LossWeights(width, height, masks.structure);
  ImageBuffer d_intensity(width, height, 1, 0.0);
  AccumulateDirectionalGradient(edit_i, source_i, forward, w_spl, params.rho,
                                params.radius, &d_intensity, nullptr);
  AccumulateDirectionalGradient(source_i, edit_i, reverse, w_spl, params.rho,
                                params.radius, nullptr, &d_intensity);

  if (!rgb) {
    out.gradient = std::move(d_intensity);
    return out;
  }

  out.gradient = ImageBuffer(width, height, 3, 0.0);
  auto di = d_intensity.plane(0);
  for (int c = 0; c < 3; ++c) {
    auto g = out.gradient.plane(c);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = di[k] / 3.0;
  }
  if (params.lambda_cpl > 0.0) {
    const ImageBuffer w_cpl = LossWeights(width, height, masks.color);
    auto wc = w_cpl.plane(0);
    auto db = cb_diff.plane(0), dr = cr_diff.plane(0);
    for (int c = 0; c < 3; ++c) {
      auto g = out.gradient.plane(c);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const double s = 2.0 * params.lambda_cpl * wc[k];
        g[k] += s * (kCbFromRgb[c] * db[k] + kCrFromRgb[c] * dr[k]);
      }
    }
  }
  return out;
}

}  // namespace

void SplParams::Validate() const {
  Require(radius >= 1, "window radius must be >= 1");
  Require(rho >= 0.0 && std::isfinite(rho), "rho must be finite and >= 0");
  Require(lambda_cpl >= 0.0 && std::isfinite(lambda_cpl),
          "lambda must be finite and >= 0");
}

LlmCoefficients FitLocalLinearModel(const ImageBuffer& target,
                                    const ImageBuffer& base,
                                    const SplParams& params) {
  params.Validate();
  CheckPlanes(base, target);
  const WindowStats s = ComputeWindowStats(base, target, params.radius);
  LlmCoefficients out{ImageBuffer(base.width(), base.height(), 1),
                      ImageBuffer(base.width(), base.height(), 1)};
  auto v = s.var_p.plane(0), c = s.cov_pq.plane(0);
  auto mb = s.mean_p.plane(0), mt = s.mean_q.plane(0);
  auto a = out.a.plane(0), b = out.b.plane(0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = Slope(c[k], v[k], params.rho);
    b[k] = mt[k] - a[k] * mb[k];
  }
  return out;
}

LossValue DirectionalDifference(const ImageBuffer& edit,
                                const ImageBuffer& source,
                                const SplParams& params) {
  params.Validate();
  CheckPlanes(edit, source);
  DirectionalFit fit = FitDirection(edit, source, params);
  LossValue out;
  out.value = WeightedSum(fit.map, nullptr);
  out.map = std::move(fit.map);
  return out;
}

LossValue StructurePreservationLoss(const ImageBuffer& edit,
                                    const ImageBuffer& source,
                                    const SplParams& params,
                                    const MaskMap* mask) {
  params.Validate();
  CheckPlanes(edit, source);
  CheckMask(mask, edit);
  LossValue out;
  out.map = FitDirection(edit, source, params).map;
  const ImageBuffer reverse = FitDirection(source, edit, params).map;
  auto dst = out.map.plane(0);
  auto rev = reverse.plane(0);
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += rev[k];
  out.value = WeightedSum(out.map, mask);
  return out;
}

LossValue ColorPreservationLoss(const ImageBuffer& edit,
                                const ImageBuffer& source,
                                const MaskMap* mask) {
  Require(edit.channels() == 3 && source.channels() == 3,
          "color loss expects RGB images");
  Require(edit.SameSize(source), "edit and source differ in size");
  CheckMask(mask, edit);
  const ImageBuffer ce = RgbToCbCr(edit);
  const ImageBuffer cs = RgbToCbCr(source);
  LossValue out;
  out.map = ImageBuffer(edit.width(), edit.height(), 1);
  auto m = out.map.plane(0);
  auto eb = ce.plane(0), er = ce.plane(1), sb = cs.plane(0), sr = cs.plane(1);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double db = eb[k] - sb[k];
    const double dr = er[k] - sr[k];
    m[k] = db * db + dr * dr;
  }
  out.value = WeightedSum(out.map, mask);
  return out;
}

LossReport TotalLoss(const ImageBuffer& edit, const ImageBuffer& source,
                     const SplParams& params, const LossMasks& masks) {
  return Evaluate(edit, source, params, masks, false).report;
}

ImageBuffer LossGradient(const ImageBuffer& edit, const ImageBuffer& source,
                         const SplParams& params, const LossMasks& masks) {
  return Evaluate(edit, source, params, masks, true).gradient;
}

LossEvaluation EvaluateLoss(const ImageBuffer& edit, const ImageBuffer& source,
                            const SplParams& params, const LossMasks& masks) {
  return Evaluate(edit, source, params, masks, true);
}

}  // namespace splkit
