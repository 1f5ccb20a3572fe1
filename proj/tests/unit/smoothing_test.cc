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

#include "zo/smoothing.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "zo/errors.h"

namespace zo {
namespace {

TEST(SmoothedValueTest, LinearFunctionIsUnchanged) {
  const Eigen::Vector3d a(1, -2, 3), x(0.5, 0.5, -1);
  const ValueOracle f = [a](const Eigen::VectorXd& z) { return a.dot(z); };
  RandomStream rng(1);
  for (auto kernel : {SmoothingKernel::kGaussian, SmoothingKernel::kUnitBall}) {
    const auto mc = SmoothedValueMc(f, x, {0.3, kernel, 20000}, rng);
    EXPECT_LT(std::abs(mc.estimate - a.dot(x)), 3 * mc.std_error);
  }
}

TEST(SmoothedValueTest, SquaredNormGainsDeltaSquaredD) {
  const Eigen::Vector4d x(1, 0, -1, 2);
  const ValueOracle f = [](const Eigen::VectorXd& z) { return z.squaredNorm(); };
  RandomStream rng(2);
  const double delta = 0.5;
  const auto mc = SmoothedValueMc(f, x, {delta, SmoothingKernel::kGaussian, 50000}, rng);
  EXPECT_LT(std::abs(mc.estimate - (x.squaredNorm() + delta * delta * 4)), 3 * mc.std_error);
}

TEST(SmoothedValueTest, AbsoluteValueGapWithinBound) {
  const ValueOracle f = [](const Eigen::VectorXd& z) { return std::abs(z[0]); };
  RandomStream rng(3);
  const double delta = 0.1;
  const auto mc = SmoothedValueMc(f, Eigen::VectorXd::Zero(1),
                                  {delta, SmoothingKernel::kGaussian, 50000}, rng);
  const double bound = SmoothingGapBound(FunctionClass::kLipschitz, 1.0, delta, 1,
                                         SmoothingKernel::kGaussian);
  EXPECT_DOUBLE_EQ(bound, 0.1);
  EXPECT_LE(mc.estimate, bound + 3 * mc.std_error);
  // delta * E|u| = 0.1 * sqrt(2 / pi).
  EXPECT_NEAR(mc.estimate, 0.1 * std::sqrt(2.0 / M_PI), 3 * mc.std_error);
}

TEST(SmoothedValueTest, RejectsBadInput) {
  const ValueOracle f = [](const Eigen::VectorXd&) { return 0.0; };
  const ValueOracle nan = [](const Eigen::VectorXd&) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  RandomStream rng(4);
  EXPECT_THROW(SmoothedValueMc(f, Eigen::VectorXd::Zero(2), {0.0}, rng), ConfigError);
  EXPECT_THROW(SmoothedValueMc(f, Eigen::VectorXd::Zero(2), {0.1, SmoothingKernel::kGaussian, 0},
                               rng),
               ConfigError);
  EXPECT_THROW(SmoothedValueMc(nan, Eigen::VectorXd::Zero(2), {0.1}, rng), QueryError);
}

TEST(SmoothedValueTest, StdErrorShrinksLikeInverseSqrtN) {
  const ValueOracle f = [](const Eigen::VectorXd& z) { return z.squaredNorm(); };
  const Eigen::Vector2d x(1, 1);
  double se[2];
  int i = 0;
  for (int n : {2000, 32000}) {
    RandomStream rng(5);
    se[i++] = SmoothedValueMc(f, x, {0.5, SmoothingKernel::kGaussian, n}, rng).std_error;
  }
  EXPECT_NEAR(se[0] / se[1], 4.0, 0.4);
}

TEST(GapBoundTest, HandValues) {
  EXPECT_DOUBLE_EQ(
      SmoothingGapBound(FunctionClass::kLipschitz, 2.0, 0.1, 4, SmoothingKernel::kGaussian), 0.4);
  EXPECT_NEAR(SmoothingGapBound(FunctionClass::kSmooth, 1.0, 0.1, 4, SmoothingKernel::kGaussian),
              0.04, 1e-15);
  EXPECT_DOUBLE_EQ(
      SmoothingGapBound(FunctionClass::kLipschitz, 2.0, 0.1, 4, SmoothingKernel::kUnitBall), 0.2);
}

TEST(SmoothedLipschitzTest, HandValues) {
  EXPECT_DOUBLE_EQ(SmoothedLipschitzConstant(1, 1, 1), 1.0);
  EXPECT_DOUBLE_EQ(SmoothedLipschitzConstant(2, 0.5, 4), 8.0);
  EXPECT_DOUBLE_EQ(SmoothedLipschitzConstant(6, 0.3, 7), 2 * SmoothedLipschitzConstant(3, 0.3, 7));
  EXPECT_THROW(SmoothedLipschitzConstant(1, 0, 1), ConfigError);
}

// sum_i log cosh(x_i) has Hessian diag(sech^2) <= I, so L1 = 1.
TEST(SmoothedGradientTest, GapWithinBound) {
  const ValueOracle f = [](const Eigen::VectorXd& z) {
    double s = 0.0;
    for (double v : z) s += std::log(std::cosh(v));
    return s;
  };
  const Eigen::Vector3d x(0.3, -1.2, 2.0);
  const Eigen::Vector3d grad = x.array().tanh();
  for (double delta : {0.05, 0.2}) {
    RandomStream rng(6);
    const auto mc = SmoothedGradientMc(f, x, delta, 200000, rng);
    const double bound = SmoothedGradientGapBound(1.0, delta, 3);
    for (int i = 0; i < 3; ++i) {
      EXPECT_LE(std::abs(mc.estimate[i] - grad[i]), bound + 3 * mc.std_error[i]);
    }
  }
}

TEST(SmoothedGradientTest, QuadraticGradientIsUnchanged) {
  // grad f_delta = grad f for quadratics.
  const Eigen::Vector2d c(1, -1);
  const ValueOracle f = [c](const Eigen::VectorXd& z) { return 0.5 * (z - c).squaredNorm(); };
  const Eigen::Vector2d x(0.2, 0.4);
  RandomStream rng(7);
  const auto mc = SmoothedGradientMc(f, x, 0.1, 200000, rng);
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(mc.estimate[i], x[i] - c[i], 3 * mc.std_error[i]);
}

}  // namespace
}  // namespace zo
