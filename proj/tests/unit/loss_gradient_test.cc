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

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.h"
#include "splkit/structure_loss.h"

namespace splkit {
namespace {

SplParams Params(int radius, double rho, double lambda) {
  SplParams p;
  p.radius = radius;
  p.rho = rho;
  p.lambda_cpl = lambda;
  return p;
}

double RelativeError(double analytic, double numeric) {
  return std::abs(analytic - numeric) /
         std::max({std::abs(analytic), std::abs(numeric), 1e-8});
}

// Checks LossGradient against central differences at `samples` random
// coordinates.
void ExpectMatchesFiniteDifferences(const ImageBuffer& edit,
                                    const ImageBuffer& source,
                                    const SplParams& params,
                                    const LossMasks& masks, std::mt19937_64& rng,
                                    int samples = 50) {
  const ImageBuffer grad = LossGradient(edit, source, params, masks);
  ASSERT_TRUE(grad.SameShape(edit));
  auto loss = [&](const ImageBuffer& x) {
    return TotalLoss(x, source, params, masks).total;
  };
  std::uniform_int_distribution<std::size_t> pick(0, edit.data().size() - 1);
  for (int s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng);
    const double fd = testing::CentralDifference(loss, edit, i, 1e-4);
    EXPECT_LT(RelativeError(grad.data()[i], fd), 1e-3)
        << "sample " << i << " analytic " << grad.data()[i] << " fd " << fd;
  }
}

TEST(LossGradient, VanishesAtExactMinimum) {
  std::mt19937_64 rng(1);
  const ImageBuffer img = testing::RandomImage(rng, 14, 14, 1);
  const ImageBuffer g = LossGradient(img, img, Params(2, 0.0, 1e-4));
  for (double v : g.data()) EXPECT_NEAR(v, 0.0, 1e-9);
  const ImageBuffer rgb = testing::RandomImage(rng, 14, 14, 3);
  const ImageBuffer g3 = LossGradient(rgb, rgb, Params(2, 0.0, 1.0));
  for (double v : g3.data()) EXPECT_NEAR(v, 0.0, 1e-9);
}

TEST(LossGradient, MatchesFiniteDifferencesGray) {
  std::mt19937_64 rng(2);
  const ImageBuffer edit = testing::RandomImage(rng, 12, 12, 1);
  const ImageBuffer source = testing::RandomImage(rng, 12, 12, 1);
  ExpectMatchesFiniteDifferences(edit, source, Params(2, 1e-4, 1e-4), {}, rng);
}

TEST(LossGradient, MatchesFiniteDifferencesRgbWithStrongColorTerm) {
  std::mt19937_64 rng(3);
  const ImageBuffer edit = testing::RandomImage(rng, 12, 12, 3);
  const ImageBuffer source = testing::RandomImage(rng, 12, 12, 3);
  ExpectMatchesFiniteDifferences(edit, source, Params(2, 1e-4, 1.0), {}, rng);
  ExpectMatchesFiniteDifferences(edit, source, Params(2, 1e-4, 1e-4), {}, rng);
}

TEST(LossGradient, MatchesFiniteDifferencesMasked) {
  std::mt19937_64 rng(4);
  const ImageBuffer edit = testing::RandomImage(rng, 12, 12, 3);
  const ImageBuffer source = testing::RandomImage(rng, 12, 12, 3);
  const ImageBuffer soft = testing::RandomImage(rng, 12, 12, 1);
  const MaskMap mask = MaskMap::FromPlane(soft);
  MaskMap other(12, 12, 0.0);
  for (int y = 2; y < 7; ++y) {
    for (int x = 3; x < 9; ++x) other.set(y, x, 1.0);
  }
  ExpectMatchesFiniteDifferences(edit, source, Params(2, 1e-4, 0.5),
                                 LossMasks::Both(&mask), rng);
  ExpectMatchesFiniteDifferences(edit, source, Params(2, 1e-4, 0.5),
                                 LossMasks{&other, &mask}, rng);
}

TEST(LossGradient, MatchesFiniteDifferencesWithDefaultWindowAndNearFlatRegions) {
  std::mt19937_64 rng(5);
  ImageBuffer source = testing::TexturedImage(24, 24, 1, 7);
  ImageBuffer edit = source;
  for (double& v : edit.data()) v = 0.6 * v + 0.2;
  for (int y = 8; y < 14; ++y) {
    for (int x = 8; x < 14; ++x) edit(y, x) = 0.0;
  }
  ExpectMatchesFiniteDifferences(edit, source, SplParams{}, {}, rng);
}

TEST(LossGradient, ZeroFarFromMaskSupport) {
  std::mt19937_64 rng(6);
  const int n = 30, radius = 2;
  const ImageBuffer edit = testing::RandomImage(rng, n, n, 3);
  const ImageBuffer source = testing::RandomImage(rng, n, n, 3);
  MaskMap mask(n, n, 0.0);
  for (int y = 10; y < 15; ++y) {
    for (int x = 12; x < 16; ++x) mask.set(y, x, 0.7);
  }
  const ImageBuffer g =
      LossGradient(edit, source, Params(radius, 1e-4, 1.0), LossMasks::Both(&mask));
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        const int dy = std::max({10 - y, y - 14, 0});
        const int dx = std::max({12 - x, x - 15, 0});
        if (std::max(dx, dy) > 2 * radius) {
          EXPECT_EQ(g.at(c, y, x), 0.0) << c << " " << y << " " << x;
        }
      }
    }
  }
}

TEST(EvaluateLoss, AgreesWithSeparateCalls) {
  std::mt19937_64 rng(7);
  const ImageBuffer edit = testing::RandomImage(rng, 16, 11, 3);
  const ImageBuffer source = testing::RandomImage(rng, 16, 11, 3);
  const SplParams p = Params(3, 1e-4, 0.2);
  const LossEvaluation e = EvaluateLoss(edit, source, p);
  EXPECT_EQ(e.report.total, TotalLoss(edit, source, p).total);
  EXPECT_EQ(e.gradient, LossGradient(edit, source, p));
}

}  // namespace
}  // namespace splkit
