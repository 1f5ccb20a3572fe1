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

#include "zo/sampling.h"

#include <gtest/gtest.h>

#include "zo/errors.h"

namespace zo {
namespace {

TEST(GaussianDirectionTest, HasRequestedDimension) {
  RandomStream rng(1);
  const Direction u = SampleGaussianDirection(rng, 3);
  EXPECT_EQ(u.dimension(), 3);
  EXPECT_EQ(u.kind, DirectionKind::kGaussian);
}

TEST(GaussianDirectionTest, ZeroDimensionThrows) {
  RandomStream rng(1);
  EXPECT_THROW(SampleGaussianDirection(rng, 0), DimensionError);
  EXPECT_THROW(SampleSphereDirection(rng, 0), DimensionError);
}

TEST(GaussianDirectionTest, MomentsMatchStandardNormal) {
  RandomStream rng(7);
  const int d = 4, n = 100000;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  double sq = 0.0, fourth = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd u = SampleGaussianDirection(rng, d).components;
    mean += u;
    const double s = u.squaredNorm();
    sq += s;
    fourth += s * s;
  }
  mean /= n;
  for (int i = 0; i < d; ++i) EXPECT_LT(std::abs(mean[i]), 0.02);
  EXPECT_NEAR(sq / n, 4.0, 0.1);
  // E|u|^4 = d (d + 2).
  EXPECT_NEAR(fourth / n, 24.0, 0.05 * 24.0);
}

TEST(SphereDirectionTest, UnitNorm) {
  RandomStream rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Direction u = SampleSphereDirection(rng, 5);
    EXPECT_EQ(u.kind, DirectionKind::kSphere);
    EXPECT_NEAR(u.components.norm(), 1.0, 1e-12);
  }
}

TEST(SphereDirectionTest, MeanZeroAndCovarianceIdentityOverD) {
  RandomStream rng(11);
  const int d = 3, n = 100000;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd u = SampleSphereDirection(rng, d).components;
    mean += u;
    cov += u * u.transpose();
  }
  mean /= n;
  cov /= n;
  for (int i = 0; i < d; ++i) EXPECT_LT(std::abs(mean[i]), 0.02);
  // Entry variance of u_i u_j is at most 1/d^2 scale; 0.01 is > 5 standard errors.
  EXPECT_LT((cov - Eigen::MatrixXd::Identity(d, d) / d).cwiseAbs().maxCoeff(), 0.01);
}

TEST(RandomStreamTest, SameSeedSameSequence) {
  RandomStream a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const Eigen::VectorXd u = SampleGaussianDirection(a, 6).components;
    const Eigen::VectorXd v = SampleGaussianDirection(b, 6).components;
    ASSERT_EQ(u, v);
  }
}

TEST(RandomStreamTest, DerivedStreamsDiffer) {
  RandomStream a = RandomStream::Derive(5, 0);
  RandomStream b = RandomStream::Derive(5, 1);
  RandomStream c = RandomStream::Derive(6, 0);
  const std::uint64_t x = a.NextU64(), y = b.NextU64(), z = c.NextU64();
  EXPECT_NE(x, y);
  EXPECT_NE(x, z);
  EXPECT_EQ(RandomStream::Derive(5, 1).NextU64(), y);
}

TEST(UnitBallTest, SamplesStayInside) {
  RandomStream rng(9);
  double mean_norm = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const Eigen::VectorXd v = SampleUnitBall(rng, 2);
    ASSERT_LE(v.norm(), 1.0);
    mean_norm += v.norm();
  }
  // E|v| = d / (d + 1) for the uniform ball.
  EXPECT_NEAR(mean_norm / 20000, 2.0 / 3.0, 0.01);
}

}  // namespace
}  // namespace zo
