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

#include "zo/optimizer.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "zo/synthetic_problems.h"

namespace zo {
namespace {

OptimizerConfig Config(EstimatorKind kind, int d, double eta, double delta, std::int64_t horizon,
                       std::uint64_t seed = 0) {
  OptimizerConfig c;
  c.estimator = kind;
  c.eta = eta;
  c.delta = delta;
  c.horizon = horizon;
  c.set = FeasibleSet::Unconstrained(d);
  c.seed = seed;
  c.x0 = Eigen::VectorXd::Zero(d);
  return c;
}

const EstimatorKind kAllKinds[] = {EstimatorKind::kResidual, EstimatorKind::kOnePoint,
                                   EstimatorKind::kTwoPoint, EstimatorKind::kNaiveOnlineTwoPoint};

TEST(ProjectedUpdateTest, Arithmetic) {
  const auto free = FeasibleSet::Unconstrained(2);
  EXPECT_EQ(ProjectedUpdate(free, Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), 0.1),
            Eigen::Vector2d(-0.1, 0));
  const Eigen::Vector2d x(0.3, -0.7);
  EXPECT_EQ(ProjectedUpdate(free, x, Eigen::Vector2d(5, 5), 0.0), x);
}

TEST(ProjectedUpdateTest, ProjectionClamps) {
  const auto ball = FeasibleSet::Ball(Eigen::Vector2d::Zero(), 1.0);
  EXPECT_EQ(ProjectedUpdate(ball, Eigen::Vector2d(1, 0), Eigen::Vector2d(-1, 0), 1.0),
            Eigen::Vector2d(1, 0));
}

TEST(OptimizerTest, ZeroProblemKeepsIterate) {
  auto p = MakeZeroProblem(3);
  auto c = Config(EstimatorKind::kResidual, 3, 0.5, 0.1, 100);
  c.x0 = Eigen::Vector3d(1, -2, 0.5);
  const RunTrace trace = RunOptimizer(*p, c);
  ASSERT_EQ(trace.steps.size(), 100u);
  for (const auto& s : trace.steps) {
    EXPECT_EQ(s.x, c.x0);
    EXPECT_EQ(s.estimate_sq_norm, 0.0);
  }
  EXPECT_EQ(trace.final_x, c.x0);
}

TEST(OptimizerTest, TwoPointDescendsOnBowl) {
  const Eigen::VectorXd center = Eigen::VectorXd::Constant(4, 1.0);
  double distance = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = MakeDriftingQuadratic(4, 0.0, center, seed);
    const RunTrace trace = RunOptimizer(*p, Config(EstimatorKind::kTwoPoint, 4, 0.02, 0.01, 500,
                                                   seed));
    distance += (trace.final_x - center).norm() / 20;
  }
  EXPECT_LT(distance, center.norm());
  EXPECT_LT(distance, 0.5 * center.norm());
}

TEST(OptimizerTest, QueryAccounting) {
  const std::int64_t horizon = 37;
  for (EstimatorKind kind : kAllKinds) {
    auto p = MakeDriftingQuadratic(3, 0.01, Eigen::VectorXd::Zero(3), 1);
    const RunTrace trace = RunOptimizer(*p, Config(kind, 3, 0.01, 0.1, horizon, 2));
    const std::int64_t expected = horizon * QueriesPerStep(kind);
    EXPECT_EQ(trace.total_queries, expected) << EstimatorName(kind);
    EXPECT_EQ(p->total_queries(), expected) << EstimatorName(kind);
    std::int64_t summed = 0;
    for (const auto& s : trace.steps) summed += s.queries_used;
    EXPECT_EQ(summed, expected);
  }
}

TEST(OptimizerTest, IteratesStayFeasible) {
  const auto ball = FeasibleSet::Ball(Eigen::Vector3d(0.2, 0, 0), 0.5);
  for (EstimatorKind kind : kAllKinds) {
    auto p = MakeDriftingQuadratic(3, 0.05, Eigen::Vector3d(3, 3, 3), 4);
    auto c = Config(kind, 3, 0.5, 0.05, 300, 5);
    c.set = ball;
    const RunTrace trace = RunOptimizer(*p, c);
    for (const auto& s : trace.steps) ASSERT_TRUE(ball.Contains(s.x)) << EstimatorName(kind);
    EXPECT_TRUE(ball.Contains(trace.final_x));
  }
}

TEST(OptimizerTest, SphereVariantQueriesStayInSet) {
  const auto ball = FeasibleSet::Ball(Eigen::VectorXd::Zero(4), 1.0);
  auto p = MakeDriftingQuadratic(4, 0.05, Eigen::Vector4d(2, 0, 0, 0), 6);
  auto c = Config(EstimatorKind::kResidualSphere, 4, 0.05, 0.3, 3000, 7);
  c.set = ball;
  c.xi = 0.3;  // delta / r
  ZoOptimizer opt(*p, c);
  const RunTrace trace = opt.Run();
  const auto shrunk = ball.Shrink(0.3);
  int violations = 0;
  for (const auto& s : trace.steps) {
    if (!ball.Contains(s.query_point)) ++violations;
    ASSERT_TRUE(shrunk.Contains(s.x));
  }
  EXPECT_EQ(violations, 0);
}

TEST(OptimizerTest, SphereVariantNeedsMargin) {
  auto p = MakeDriftingQuadratic(2, 0.0, Eigen::Vector2d::Zero());
  auto c = Config(EstimatorKind::kResidualSphere, 2, 0.05, 0.3, 10);
  c.set = FeasibleSet::Ball(Eigen::Vector2d::Zero(), 1.0);
  c.xi = 0.1;
  EXPECT_THROW(ZoOptimizer(*p, c), ConfigError);
}

TEST(OptimizerTest, DeterministicGivenSeeds) {
  for (EstimatorKind kind : kAllKinds) {
    RunTrace traces[2];
    for (auto& trace : traces) {
      auto p = MakeRandomWalkOffset(MakeDriftingQuadratic(3, 0.05, Eigen::VectorXd::Zero(3), 8),
                                    0.5, 2.0, 9);
      auto c = Config(kind, 3, 0.01, 0.1, 200, 10);
      c.set = FeasibleSet::Ball(Eigen::VectorXd::Zero(3), 1.0);
      trace = RunOptimizer(*p, c);
    }
    for (std::size_t i = 0; i < traces[0].steps.size(); ++i) {
      ASSERT_EQ(traces[0].steps[i].x, traces[1].steps[i].x);
      ASSERT_EQ(traces[0].steps[i].y, traces[1].steps[i].y);
    }
  }
}

TEST(OptimizerTest, ContractionWarning) {
  ProblemCapabilities caps;
  caps.lipschitz_l0 = 1.0;
  FunctionSequence p(2, [](std::int64_t, const Eigen::VectorXd& x) { return x.sum(); }, nullptr,
                     caps);
  // alpha = 4 d L0^2 eta^2 / delta^2.
  ZoOptimizer fast(p, Config(EstimatorKind::kResidual, 2, 0.1, 0.1, 5));
  EXPECT_DOUBLE_EQ(*fast.trace().contraction_rate, 8.0);
  EXPECT_TRUE(fast.trace().contraction_warning);
  ZoOptimizer slow(p, Config(EstimatorKind::kResidual, 2, 0.01, 0.1, 5));
  EXPECT_FALSE(slow.trace().contraction_warning);
  auto sphere = Config(EstimatorKind::kResidualSphere, 2, 0.04, 0.1, 5);
  sphere.set = FeasibleSet::Ball(Eigen::Vector2d::Zero(), 1.0);
  sphere.xi = 0.1;
  ZoOptimizer s(p, sphere);  // 4 d^2 L0^2 eta^2 / delta^2 = 2.56
  EXPECT_NEAR(*s.trace().contraction_rate, 2.56, 1e-12);
}

TEST(OptimizerTest, NonFiniteValueAbortsWithPartialTrace) {
  FunctionSequence p(2, [](std::int64_t t, const Eigen::VectorXd&) {
    return t == 3 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
  });
  try {
    RunOptimizer(p, Config(EstimatorKind::kOnePoint, 2, 0.01, 0.1, 10));
    FAIL() << "expected RunAborted";
  } catch (const RunAborted& e) {
    EXPECT_EQ(e.partial().steps.size(), 4u);
    EXPECT_EQ(e.partial().steps.back().t, 3);
  }
}

TEST(OptimizerTest, TwoPointNeedsSimulationMode) {
  auto p = MakeDriftingQuadratic(2, 0.0, Eigen::Vector2d::Zero());
  p->set_simulation_mode(false);
  EXPECT_THROW(ZoOptimizer(*p, Config(EstimatorKind::kTwoPoint, 2, 0.1, 0.1, 5)), ContractError);
  EXPECT_NO_THROW(ZoOptimizer(*p, Config(EstimatorKind::kResidual, 2, 0.1, 0.1, 5)));
}

TEST(OptimizerTest, StepPastHorizonThrows) {
  auto p = MakeZeroProblem(1);
  ZoOptimizer opt(*p, Config(EstimatorKind::kResidual, 1, 0.1, 0.1, 2));
  opt.Step();
  opt.Step();
  EXPECT_THROW(opt.Step(), StateError);
}

TEST(OptimizerTest, RealizedCostIsNotCharged) {
  auto p = MakeDriftingQuadratic(2, 0.0, Eigen::Vector2d(1, 1));
  const RunTrace trace = RunOptimizer(*p, Config(EstimatorKind::kResidual, 2, 0.01, 0.1, 10));
  for (const auto& s : trace.steps) {
    ASSERT_TRUE(s.realized_cost);
    EXPECT_DOUBLE_EQ(*s.realized_cost, 0.5 * (s.x - Eigen::Vector2d(1, 1)).squaredNorm());
    EXPECT_EQ(s.queries_used, 1);
  }
}

}  // namespace
}  // namespace zo
