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

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "test_util.h"
#include "zo/errors.h"
#include "zo/lqr_env.h"
#include "zo/resource_grid_env.h"
#include "zo/synthetic_problems.h"

namespace zo {
namespace {

using testing::Gen;

std::unique_ptr<DriftingQuadratic> Bowl(int d, double rate, std::uint64_t seed = 0) {
  return MakeDriftingQuadratic(d, rate, Eigen::VectorXd::Zero(d), seed);
}

TEST(DriftingQuadraticTest, StationaryWithoutDrift) {
  auto p = MakeDriftingQuadratic(3, 0.0, Eigen::Vector3d(1, 2, 3));
  for (int t = 0; t < 10; ++t) p->Advance();
  EXPECT_EQ(p->Optimum(), Eigen::Vector3d(1, 2, 3));
  EXPECT_DOUBLE_EQ(p->TrueCost(Eigen::Vector3d(1, 2, 4)), 0.5);
}

TEST(DriftingQuadraticTest, ZeroAtCenter) {
  auto p = Bowl(4, 0.1, 9);
  for (int t = 0; t < 20; ++t) {
    EXPECT_EQ(p->Query(t, p->center()), 0.0);
    EXPECT_EQ(p->Gradient(p->center()), Eigen::VectorXd::Zero(4));
    p->Advance();
  }
}

TEST(DriftingQuadraticTest, CenterMovesByDriftRate) {
  auto p = Bowl(3, 0.05, 4);
  for (int t = 0; t < 100; ++t) p->Advance();
  const auto& h = p->center_history();
  ASSERT_EQ(h.size(), 100u);
  for (std::size_t i = 1; i < h.size(); ++i) EXPECT_NEAR((h[i] - h[i - 1]).norm(), 0.05, 1e-12);
}

TEST(DriftingQuadraticTest, EmpiricalVariationMatchesDirectSimulation) {
  // At a fixed point z, f_t(z) - f_{t-1}(z) = -rho zeta^T (z - c_{t-1}) - rho^2 / 2.
  // Brute-force E[.^2] by sampling zeta separately from the problem's stream.
  const int d = 3;
  const double rho = 0.1;
  const Eigen::Vector3d z(0.4, -0.2, 0.1);
  auto p = Bowl(d, rho, 12);
  double empirical = 0.0, oracle = 0.0;
  RandomStream rng(77);
  const int n = 10000;
  for (int t = 0; t < n; ++t) {
    const double before = p->TrueCost(z);
    const Eigen::VectorXd c = p->center();
    p->Advance();
    const double diff = p->TrueCost(z) - before;
    empirical += diff * diff;
    const Eigen::VectorXd zeta = SampleSphereDirection(rng, d).components;
    const Eigen::VectorXd moved = c + rho * zeta;
    const double sim = 0.5 * (z - moved).squaredNorm() - 0.5 * (z - c).squaredNorm();
    oracle += sim * sim;
  }
  EXPECT_NEAR(empirical / oracle, 1.0, 0.1);
}

TEST(DriftingQuadraticTest, HindsightMinimizerIsProjectedMean) {
  auto p = MakeDriftingQuadratic(2, 0.3, Eigen::Vector2d(2, 0), 5);
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  const int n = 50;
  for (int t = 0; t < n; ++t) {
    mean += p->center() / n;
    p->Advance();
  }
  const auto ball = FeasibleSet::Ball(Eigen::Vector2d::Zero(), 0.5);
  EXPECT_LT((p->HindsightMinimizer(ball) - ball.Project(mean)).norm(), 1e-12);
}

TEST(RandomWalkOffsetTest, ZeroNoiseMatchesBase) {
  auto base = Bowl(2, 0.1, 3);
  auto wrapped = MakeRandomWalkOffset(Bowl(2, 0.1, 3), 0.0, 0.0, 8);
  Gen g(1);
  for (int t = 0; t < 50; ++t) {
    const Eigen::VectorXd x = g.Vector(2);
    EXPECT_EQ(wrapped->TrueCost(x), base->TrueCost(x));
    EXPECT_EQ(wrapped->Query(t, x), base->Query(t, x));
    base->Advance();
    wrapped->Advance();
  }
}

TEST(RandomWalkOffsetTest, GradientsAreTheBase) {
  auto base = Bowl(2, 0.0);
  auto wrapped = MakeRandomWalkOffset(Bowl(2, 0.0), 1.0, 5.0, 2);
  Gen g(2);
  for (int t = 0; t < 30; ++t) {
    const Eigen::VectorXd x = g.Vector(2);
    EXPECT_EQ(wrapped->Gradient(x), base->Gradient(x));
    wrapped->Advance();
  }
}

TEST(RandomWalkOffsetTest, OffsetIsUnbounded) {
  int large = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto p = MakeRandomWalkOffset(Bowl(1, 0.0), 1.0, 0.0, seed);
    double peak = 0.0;
    for (int t = 0; t < 10000; ++t) {
      p->Advance();
      peak = std::max(peak, std::abs(p->offset()));
    }
    if (peak > 10.0) ++large;
  }
  EXPECT_GE(large, 8);
}

TEST(AdversaryTest, ZeroBudgetMatchesBase) {
  auto base = Bowl(2, 0.1, 6);
  auto adv = MakeBoundedVariationAdversary(Bowl(2, 0.1, 6), 0.0, 1);
  Gen g(3);
  for (int t = 0; t < 50; ++t) {
    const Eigen::VectorXd x = g.Vector(2);
    EXPECT_EQ(adv->Query(t, x), base->Query(t, x));
    base->Advance();
    adv->Advance();
  }
}

TEST(AdversaryTest, VariationWithinBudget) {
  const double vf = 0.25;
  auto adv = MakeBoundedVariationAdversary(Bowl(3, 0.0), vf, 2);
  Gen g(4);
  for (int t = 0; t < 500; ++t) {
    const Eigen::VectorXd x = g.Vector(3, 0.3);
    const double before = adv->TrueCost(x);
    adv->Query(t, x);
    EXPECT_LE(std::abs(adv->TrueCost(x) - before), vf + 1e-12);
    adv->Advance();
  }
}

TEST(SingleQueryContractTest, SecondQueryRejected) {
  auto p = Bowl(2, 0.0);
  p->set_simulation_mode(false);
  p->Query(0, Eigen::Vector2d::Zero());
  EXPECT_THROW(p->Query(0, Eigen::Vector2d::Zero()), ContractError);
  EXPECT_THROW(p->QueryPair(0, Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero()), ContractError);
  p->Advance();
  EXPECT_NO_THROW(p->Query(1, Eigen::Vector2d::Zero()));
  EXPECT_THROW(p->Query(5, Eigen::Vector2d::Zero()), ContractError);
}

TEST(SingleQueryContractTest, SimulationAllowsTwo) {
  auto p = Bowl(2, 0.0);
  p->QueryPair(0, Eigen::Vector2d::Zero(), Eigen::Vector2d::Ones());
  EXPECT_THROW(p->Query(0, Eigen::Vector2d::Zero()), ContractError);
  EXPECT_EQ(p->total_queries(), 2);
}

LqrOptions NoiselessLqr(int n_x, int n_u) {
  LqrOptions o;
  o.state_dim = n_x;
  o.input_dim = n_u;
  o.noise_std = 0.0;
  o.horizon = 15;
  o.gamma = 0.9;
  return o;
}

TEST(LqrTest, DefaultsFollowPaperSetup) {
  const LqrOptions o;
  EXPECT_EQ(o.state_dim, 6);
  EXPECT_EQ(o.input_dim, 6);
  EXPECT_DOUBLE_EQ(o.gamma, 0.5);
  EXPECT_EQ(o.horizon, 50);
  EXPECT_DOUBLE_EQ(o.drift_scale, 0.01);
  EXPECT_EQ(LqrEnv(o).dimension(), 36);
}

TEST(LqrTest, ZeroDynamicsCostsInitialStateOnly) {
  LqrEnv env(NoiselessLqr(3, 2));
  env.SetDynamics(Eigen::MatrixXd::Zero(3, 3), Eigen::MatrixXd::Zero(3, 2));
  const Eigen::VectorXd x0 = env.initial_state();
  EXPECT_NEAR(env.Query(0, Eigen::VectorXd::Zero(6)), x0.squaredNorm(), 1e-14);
  EXPECT_NEAR(env.TrueCost(Eigen::VectorXd::Zero(6)), x0.squaredNorm(), 1e-14);
}

TEST(LqrTest, DiagonalDynamicsGeometricSum) {
  LqrOptions o = NoiselessLqr(3, 3);
  LqrEnv env(o);
  const Eigen::Vector3d diag(0.9, -0.5, 0.2);
  env.SetDynamics(diag.asDiagonal().toDenseMatrix(), Eigen::MatrixXd::Identity(3, 3));
  env.SetInitialState(Eigen::Vector3d(1.0, -2.0, 0.5));
  double expected = 0.0;
  for (int k = 0; k < o.horizon; ++k) {
    for (int i = 0; i < 3; ++i) {
      const double xi = env.initial_state()[i] * std::pow(diag[i], k);
      expected += std::pow(o.gamma, k) * xi * xi;
    }
  }
  const Eigen::VectorXd k0 = Eigen::VectorXd::Zero(9);
  EXPECT_NEAR(env.Query(0, k0), expected, 1e-12 * expected);
  EXPECT_NEAR(env.TrueCost(k0), expected, 1e-12 * expected);
}

TEST(LqrTest, ExpectedCostMatchesRolloutAverage) {
  LqrOptions o = LqrDeskPreset();
  o.noise_std = 0.3;
  LqrEnv env(o);
  Gen g(5);
  const Eigen::VectorXd k = g.Vector(env.dimension(), 0.1);
  double mean = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double c = env.Rollout(k, static_cast<std::uint64_t>(i));
    mean += c / n;
    sq += c * c / n;
  }
  const double se = std::sqrt((sq - mean * mean) / n);
  EXPECT_NEAR(env.TrueCost(k), mean, 4 * se);
}

TEST(LqrTest, DriftStepBounded) {
  LqrEnv env(LqrOptions{});
  for (int t = 0; t < 200; ++t) {
    const Eigen::MatrixXd a = env.a(), b = env.b();
    env.Advance();
    const double da = (env.a() - a).cwiseAbs().maxCoeff();
    const double db = (env.b() - b).cwiseAbs().maxCoeff();
    ASSERT_LE(da, 0.01);
    ASSERT_LE(db, 0.01);
    ASSERT_GE((env.a() - a).minCoeff(), 0.0);
  }
}

TEST(LqrTest, SharedNoiseInSimulationMode) {
  LqrEnv env(LqrDeskPreset());
  const Eigen::VectorXd k = Eigen::VectorXd::Zero(env.dimension());
  const auto [first, second] = env.QueryPair(0, k, k);
  EXPECT_EQ(first, second);
}

TEST(LqrTest, RejectsBadOptions) {
  LqrOptions o;
  o.horizon = 0;
  EXPECT_THROW(LqrEnv{o}, ConfigError);
  o = LqrOptions{};
  o.drift_lo = 1.0;
  o.drift_hi = 0.0;
  EXPECT_THROW(LqrEnv{o}, ConfigError);
}

TEST(GridTest, FullScaleDimension) {
  ResourceGridEnv env(GridPaperPreset());
  EXPECT_EQ(env.agents(), 16);
  EXPECT_EQ(env.slot_count(), 64);
  EXPECT_EQ(env.dimension(), 576);
  EXPECT_DOUBLE_EQ(env.options().gamma, 0.75);
  EXPECT_EQ(env.options().horizon, 30);
}

TEST(GridTest, ZeroPolicyIsUniform) {
  ResourceGridEnv env(GridPaperPreset());
  Gen g(6);
  const Eigen::VectorXd a =
      env.Allocations(Eigen::VectorXd::Zero(576), g.Vector(16), g.Vector(16));
  for (int i = 0; i < env.agents(); ++i) {
    const int n = env.slot_begin(i + 1) - env.slot_begin(i);
    for (int s = env.slot_begin(i); s < env.slot_begin(i + 1); ++s) {
      EXPECT_NEAR(a[s], 1.0 / n, 1e-15);
    }
  }
}

TEST(GridTest, SoftmaxRowsSumToOne) {
  ResourceGridEnv env(GridPaperPreset());
  Gen g(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ep = env.Simulate(g.Vector(576, 3.0), static_cast<std::uint64_t>(trial), true);
    EXPECT_LE(ep.max_row_sum_error, 1e-12);
    EXPECT_GE(ep.min_allocation, 0.0);
    EXPECT_LE(ep.max_allocation, 1.0);
  }
}

ResourceGridOptions NoDemand(double stock) {
  ResourceGridOptions o = GridDeskPreset();
  o.amplitude_lo = o.amplitude_hi = 0.0;
  o.demand_noise_std = 0.0;
  o.initial_stock = stock;
  return o;
}

TEST(GridTest, NoDemandNoCost) {
  ResourceGridEnv env(NoDemand(1.0));
  Gen g(8);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_EQ(env.Query(trial, g.Vector(env.dimension(), 5.0)), 0.0);
    env.Advance();
  }
}

TEST(GridTest, TransfersConserveStock) {
  ResourceGridEnv env(NoDemand(2.0));
  Gen g(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ep = env.Simulate(g.Vector(env.dimension(), 2.0), 0, true);
    const double total = 2.0 * env.agents();
    for (const auto& m : ep.stock) ASSERT_NEAR(m.sum(), total, 1e-12);
  }
}

TEST(GridTest, SensitivityDriftIsBounded) {
  ResourceGridEnv env(GridDeskPreset());
  for (int t = 0; t < 200; ++t) {
    const Eigen::VectorXd before = env.sensitivity();
    env.Advance();
    ASSERT_LE((env.sensitivity() - before).cwiseAbs().maxCoeff(), 0.1 + 1e-15);
    ASSERT_GE(env.sensitivity().minCoeff(), 0.0);
  }
}

}  // namespace
}  // namespace zo
