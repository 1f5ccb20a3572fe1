// Copyright 2026 The zo-residual Authors.
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

#include "zo/schedules.h"

#include <cmath>

#include <gtest/gtest.h>

#include "test_util.h"
#include "zo/errors.h"

namespace zo {
namespace {

using testing::Gen;

TEST(ConvexLipschitzScheduleTest, HandValues) {
  const Schedule s = ConvexLipschitzSchedule(1, 1, 1, 16);
  EXPECT_NEAR(s.eta, 1.0 / (16 * std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(s.eta, 0.044194, 1e-6);
  EXPECT_DOUBLE_EQ(s.delta, 0.5);
  EXPECT_NEAR(s.alpha, 1.0 / 32, 1e-15);
  EXPECT_EQ(s.tag, ScheduleTag::kConvexLipschitz);
  EXPECT_TRUE(s.valid());
}

TEST(ConvexLipschitzScheduleTest, ShortHorizonWarns) {
  const Schedule s = ConvexLipschitzSchedule(1, 1, 1, 1);
  EXPECT_FALSE(s.valid());
  EXPECT_FALSE(ConvexLipschitzSchedule(1, 2, 1, 4).valid());  // T = R^2
  EXPECT_TRUE(ConvexLipschitzSchedule(1, 2, 1, 5).valid());
}

TEST(ConvexLipschitzScheduleTest, DoublingHorizon) {
  const Schedule a = ConvexLipschitzSchedule(1.3, 0.7, 3, 1000);
  const Schedule b = ConvexLipschitzSchedule(1.3, 0.7, 3, 2000);
  EXPECT_NEAR(b.eta / a.eta, std::pow(2.0, -0.75), 1e-12);
  EXPECT_NEAR(b.delta / a.delta, std::pow(2.0, -0.25), 1e-12);
}

TEST(ConvexLipschitzScheduleTest, TuningExponentAndUnknownRadius) {
  const Schedule q = ConvexLipschitzSchedule(2, 1, 1, 256, 1.0);
  EXPECT_NEAR(q.delta, 0.5 * 0.25, 1e-15);  // sqrt(R) L0^-q T^-1/4
  EXPECT_DOUBLE_EQ(q.min_horizon, 4.0);     // L0^2q R^2
  const Schedule u = ConvexLipschitzSchedule(1, 5, 1, 16, 0.0, false);
  EXPECT_NEAR(u.eta, 1.0 / (2 * std::sqrt(2.0) * 8), 1e-15);
  EXPECT_DOUBLE_EQ(u.delta, 0.5);
}

TEST(ConvexSmoothScheduleTest, HandValues) {
  const Schedule s = ConvexSmoothSchedule(1, 1, 1, 8);
  EXPECT_NEAR(s.eta, 0.0883883, 1e-7);
  EXPECT_NEAR(s.delta, std::pow(8.0, -1.0 / 6), 1e-15);
  EXPECT_NEAR(s.delta, 0.70711, 1e-5);
  EXPECT_NEAR(s.alpha, 1.0 / 16, 1e-15);
}

TEST(ConvexSmoothScheduleTest, AlphaHalfExactlyAtThreshold) {
  for (double r : {0.5, 1.0, 3.0}) {
    const auto t = static_cast<std::int64_t>(r * r * 4);
    EXPECT_NEAR(ConvexSmoothSchedule(1.7, r, 2, t).alpha, 1.0 / 8, 1e-12);
  }
}

TEST(NonconvexLipschitzScheduleTest, HandValues) {
  const Schedule s = NonconvexLipschitzSchedule(1, 1, 1, 4);
  EXPECT_NEAR(s.eta, 0.17678, 1e-5);
  EXPECT_DOUBLE_EQ(s.delta, 1.0);
  EXPECT_NEAR(s.alpha, 1.0 / 8, 1e-15);
}

TEST(NonconvexLipschitzScheduleTest, PinsSmoothingGap) {
  Gen g(7);
  for (int i = 0; i < 200; ++i) {
    const double l0 = g.Uniform(0.1, 10), eps = g.Uniform(0.01, 2);
    const int d = g.Int(1, 50);
    const Schedule s = NonconvexLipschitzSchedule(l0, eps, d, 1000);
    EXPECT_NEAR(s.delta * std::sqrt(d) * l0, eps, 1e-12 * eps);
    const Schedule s4 = NonconvexLipschitzSchedule(l0, 4 * eps, d, 1000);
    EXPECT_NEAR(s4.eta / s.eta, 8.0, 1e-12);
  }
}

TEST(NonconvexSmoothScheduleTest, HandValues) {
  const Schedule s = NonconvexSmoothSchedule(1, 1, 4);
  EXPECT_NEAR(s.eta, 1.0 / (4 * std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(s.delta, std::pow(4.0, -0.25), 1e-15);
  EXPECT_NEAR(s.alpha, 0.25, 1e-15);
  EXPECT_TRUE(NonconvexSmoothSchedule(3, 5, 1).valid());
}

TEST(NonconvexSmoothScheduleTest, DeltaIdentity) {
  for (int d : {1, 4, 30}) {
    for (std::int64_t t : {1, 17, 10000}) {
      const Schedule s = NonconvexSmoothSchedule(2.0, d, t);
      EXPECT_NEAR(s.delta * s.delta * std::pow(d, 5.0 / 3) * std::sqrt(double(t)), 1.0, 1e-12);
    }
  }
}

TEST(SphereScheduleTest, HandValues) {
  const Schedule s = SphereConvexSchedule(1, 1, 1, 1, 16);
  EXPECT_NEAR(s.eta, 1.0 / (16 * std::sqrt(2.0)), 1e-15);
  EXPECT_DOUBLE_EQ(s.delta, 0.5);
  ASSERT_TRUE(s.xi);
  EXPECT_DOUBLE_EQ(*s.xi, 0.5);
  EXPECT_NEAR(s.alpha, 1.0 / 32, 1e-15);
}

TEST(SphereScheduleTest, XiIsDeltaOverInnerRadius) {
  const Schedule s = SphereConvexSchedule(1.5, 2.0, 0.8, 3, 400);
  EXPECT_DOUBLE_EQ(*s.xi, s.delta / 0.8);
  // Inner radius down to delta drives xi to 1; below it there is no shrink.
  EXPECT_DOUBLE_EQ(*SphereConvexSchedule(1.0, 1.0, 0.5, 1, 16).xi, 1.0);
  EXPECT_THROW(SphereConvexSchedule(1.0, 1.0, 0.4, 1, 16), ConfigError);  // delta = 0.5
}

TEST(ContractionRateTest, HandValues) {
  EXPECT_DOUBLE_EQ(ContractionRate(1, 0.5, 1, 1, DirectionKernel::kGaussian), 1.0);
  EXPECT_EQ(ContractionRate(7, 0.0, 0.1, 9, DirectionKernel::kGaussian), 0.0);
  EXPECT_EQ(ContractionRate(7, 0.0, 0.1, 9, DirectionKernel::kSphere), 0.0);
  const double g = ContractionRate(1.3, 0.01, 0.2, 6, DirectionKernel::kGaussian);
  const double s = ContractionRate(1.3, 0.01, 0.2, 6, DirectionKernel::kSphere);
  EXPECT_NEAR(s / g, 6.0, 1e-12);
}

TEST(ScheduleInvariantTest, AlphaRecomputesAndStaysBelowHalf) {
  Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const double l0 = g.Uniform(0.1, 5), r = g.Uniform(0.1, 5);
    const int d = g.Int(1, 20);
    const auto t = static_cast<std::int64_t>(g.Uniform(1, 1e5));
    const std::vector<Schedule> gaussian = {
        ConvexLipschitzSchedule(l0, r, d, t), ConvexSmoothSchedule(l0, r, d, t),
        NonconvexLipschitzSchedule(l0, g.Uniform(0.01, 2), d, t),
        NonconvexSmoothSchedule(l0, d, t)};
    for (const Schedule& s : gaussian) {
      EXPECT_EQ(s.alpha, ContractionRate(l0, s.eta, s.delta, d, DirectionKernel::kGaussian));
      if (static_cast<double>(t) >= s.min_horizon) {
        EXPECT_LE(s.alpha, 0.5 + 1e-12) << ScheduleTagName(s.tag);
      }
    }
    const double inner = g.Uniform(0.5, 1.0) * r;
    try {
      const Schedule s = SphereConvexSchedule(l0, r, inner, d, t);
      EXPECT_EQ(s.alpha, ContractionRate(l0, s.eta, s.delta, d, DirectionKernel::kSphere));
      if (static_cast<double>(t) > s.min_horizon) {
        EXPECT_LE(s.alpha, 0.5 + 1e-12);
      }
    } catch (const ConfigError&) {
      // xi > 1 for short horizons.
    }
  }
}

TEST(ScheduleTest, TagNamesRoundTrip) {
  for (auto tag : {ScheduleTag::kConvexLipschitz, ScheduleTag::kConvexSmooth,
                   ScheduleTag::kNonconvexLipschitz, ScheduleTag::kNonconvexSmooth,
                   ScheduleTag::kSphereConvex, ScheduleTag::kExplicit}) {
    EXPECT_EQ(ParseScheduleTag(ScheduleTagName(tag)), tag);
  }
  EXPECT_THROW(ParseScheduleTag("adam"), ConfigError);
  EXPECT_THROW(ConvexLipschitzSchedule(0, 1, 1, 10), ConfigError);
}

}  // namespace
}  // namespace zo
