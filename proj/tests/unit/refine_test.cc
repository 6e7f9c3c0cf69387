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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "splkit/color.h"
#include "splkit/errors.h"
#include "splkit/refine.h"

namespace splkit {
namespace {

TEST(RefineConfig, DefaultsAndValidation) {
  const RefineConfig c;
  EXPECT_EQ(c.iterations, 100);
  EXPECT_EQ(c.learning_rate, 1.0);
  EXPECT_EQ(c.momentum, 0.9);
  RefineConfig bad;
  bad.learning_rate = 0.0;
  EXPECT_THROW(bad.Validate(), ContractViolation);
  bad = RefineConfig{};
  bad.momentum = 1.0;
  EXPECT_THROW(bad.Validate(), ContractViolation);
  bad = RefineConfig{};
  bad.iterations = -1;
  EXPECT_THROW(bad.Validate(), ContractViolation);
}

TEST(MomentumStep, WithoutMomentumIsPlainGradientDescent) {
  RefineConfig c;
  c.momentum = 0.0;
  c.learning_rate = 0.5;
  ImageBuffer img(2, 1, 1, {1.0, 2.0});
  ImageBuffer vel(2, 1, 1, {3.0, -4.0});
  const ImageBuffer g(2, 1, 1, {0.2, -0.4});
  MomentumStep(img, vel, g, c);
  EXPECT_DOUBLE_EQ(img(0, 0), 0.9);
  EXPECT_DOUBLE_EQ(img(0, 1), 2.2);
}

TEST(MomentumStep, ZeroGradientAndVelocityIsNoOp) {
  const RefineConfig c;
  ImageBuffer img(3, 2, 1, 0.4);
  ImageBuffer vel(3, 2, 1, 0.0);
  const ImageBuffer before = img;
  MomentumStep(img, vel, ImageBuffer(3, 2, 1, 0.0), c);
  EXPECT_EQ(img, before);
}

TEST(MomentumStep, TwoStepsAccumulateVelocity) {
  const RefineConfig c;  // momentum 0.9, lr 1
  ImageBuffer img(1, 1, 1, 0.0);
  ImageBuffer vel(1, 1, 1, 0.0);
  const ImageBuffer g(1, 1, 1, 1.0);
  MomentumStep(img, vel, g, c);
  MomentumStep(img, vel, g, c);
  EXPECT_NEAR(img(0, 0), -2.9, 1e-15);
}

TEST(MomentumStep, ShapeMismatchIsContractViolation) {
  ImageBuffer img(2, 2, 1), vel(2, 2, 1);
  EXPECT_THROW(MomentumStep(img, vel, ImageBuffer(2, 2, 3), RefineConfig{}),
               ContractViolation);
}

TEST(Refine, ZeroIterationsReturnsClampedEdit) {
  ImageBuffer edit(4, 4, 1, 0.5);
  edit(0, 0) = 1.4;
  edit(1, 1) = -0.2;
  RefineConfig c;
  c.iterations = 0;
  const RefineResult r = Refine(ImageBuffer(4, 4, 1, 0.5), edit, nullptr, c);
  EXPECT_EQ(r.image(0, 0), 1.0);
  EXPECT_EQ(r.image(1, 1), 0.0);
  EXPECT_EQ(r.image(2, 2), 0.5);
  EXPECT_EQ(r.trace.total_loss.size(), 1u);
}

TEST(Refine, TraceLengthIsIterationsPlusOne) {
  const ImageBuffer src = testing::TexturedImage(16, 16, 3, 1);
  RefineConfig c;
  c.iterations = 7;
  const RefineResult r = Refine(src, src, nullptr, c);
  EXPECT_EQ(r.trace.total_loss.size(), 8u);
  c.record_trace = false;
  EXPECT_TRUE(Refine(src, src, nullptr, c).trace.total_loss.empty());
}

TEST(Refine, StartingAtSourceStaysPut) {
  const ImageBuffer src = testing::TexturedImage(32, 32, 3, 2);
  const RefineResult r = Refine(src, src, nullptr, RefineConfig{});
  EXPECT_LE(r.trace.final.total, r.trace.initial.total);
  EXPECT_LE(r.trace.initial.total, 1e-4 / 4);
  for (std::size_t i = 0; i < src.data().size(); ++i) {
    EXPECT_LT(std::abs(r.image.data()[i] - src.data()[i]), 1e-3);
  }
}

TEST(Refine, ToneEditSurvivesRefinement) {
  const ImageBuffer src = testing::TexturedImage(48, 48, 1, 3);
  ImageBuffer edit = src;
  for (double& v : edit.data()) v = 0.6 * v + 0.2;
  const RefineResult r = Refine(src, edit, nullptr, RefineConfig{});
  EXPECT_LE(r.trace.final.spl, r.trace.initial.spl);

  // Global least-squares affine fit of the output from the source.
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < src.data().size(); ++i) {
    const double x = src.data()[i], y = r.image.data()[i];
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double a = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double b = (sy - a * sx) / n;
  double sq = 0;
  for (std::size_t i = 0; i < src.data().size(); ++i) {
    const double e = a * src.data()[i] + b - r.image.data()[i];
    sq += e * e;
  }
  EXPECT_LT(std::sqrt(sq / n), 0.01);
}

TEST(Refine, ReducesStructuralErrorWithLargerStep) {
  // The default step is tuned for per-pixel-averaged losses on large
  // images; a larger step shows the descent direction repairs a zeroed
  // block quickly on a small image.
  const ImageBuffer src = testing::TexturedImage(48, 48, 1, 4);
  ImageBuffer edit = src;
  for (double& v : edit.data()) v = 0.6 * v + 0.2;
  for (int y = 16; y < 28; ++y) {
    for (int x = 16; x < 28; ++x) edit(y, x) = 0.0;
  }
  RefineConfig c;
  c.learning_rate = 100.0;
  const RefineResult r = Refine(src, edit, nullptr, c);
  EXPECT_LT(r.trace.final.spl, 0.2 * r.trace.initial.spl);
  EXPECT_LT(r.trace.total_loss.back(), r.trace.total_loss.front());
}

TEST(Refine, IsDeterministic) {
  const ImageBuffer src = testing::TexturedImage(20, 20, 3, 5);
  std::mt19937_64 rng(9);
  const ImageBuffer edit = testing::RandomImage(rng, 20, 20, 3);
  RefineConfig c;
  c.iterations = 10;
  const RefineResult a = Refine(src, edit, nullptr, c);
  const RefineResult b = Refine(src, edit, nullptr, c);
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(a.trace.total_loss, b.trace.total_loss);
}

TEST(Refine, OutputIsInUnitRange) {
  std::mt19937_64 rng(10);
  const ImageBuffer src = testing::RandomImage(rng, 16, 16, 3);
  const ImageBuffer edit = testing::RandomImage(rng, 16, 16, 3);
  RefineConfig c;
  c.iterations = 20;
  c.learning_rate = 500.0;
  const RefineResult r = Refine(src, edit, nullptr, c);
  for (double v : r.image.data()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Refine, MaskedRefinementLeavesFarPixelsUntouched) {
  std::mt19937_64 rng(11);
  const int n = 40;
  const ImageBuffer src = testing::RandomImage(rng, n, n, 3);
  const ImageBuffer edit = testing::RandomImage(rng, n, n, 3);
  MaskMap mask(n, n, 0.0);
  for (int y = 15; y < 22; ++y) {
    for (int x = 15; x < 25; ++x) mask.set(y, x, 1.0);
  }
  RefineConfig c;
  c.iterations = 15;
  c.learning_rate = 200.0;
  c.spl_params.radius = 3;
  const RefineResult r = Refine(src, edit, &mask, c);
  int changed_near = 0;
  for (int ch = 0; ch < 3; ++ch) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        const int dy = std::max({15 - y, y - 21, 0});
        const int dx = std::max({15 - x, x - 24, 0});
        if (std::max(dx, dy) > 2 * c.spl_params.radius) {
          EXPECT_EQ(r.image.at(ch, y, x), edit.at(ch, y, x));
        } else if (r.image.at(ch, y, x) != edit.at(ch, y, x)) {
          ++changed_near;
        }
      }
    }
  }
  EXPECT_GT(changed_near, 0);
}

}  // namespace
}  // namespace splkit
