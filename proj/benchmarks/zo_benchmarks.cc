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

#include <benchmark/benchmark.h>

#include <Eigen/Core>

#include "zo/estimators.h"
#include "zo/feasible_set.h"
#include "zo/lqr_env.h"
#include "zo/optimizer.h"
#include "zo/resource_grid_env.h"
#include "zo/sampling.h"
#include "zo/synthetic_problems.h"

namespace zo {
namespace {

void BM_ResidualStep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  RandomStream rng(1);
  ResidualState s;
  double y = 0.0;
  for (auto _ : state) {
    auto r = ResidualStep(s, y, SampleGaussianDirection(rng, d), 0.1);
    s = std::move(r.next);
    y += 1e-3;
    benchmark::DoNotOptimize(r.estimate.vector.data());
  }
}
BENCHMARK(BM_ResidualStep)->Arg(5)->Arg(36)->Arg(576);

void BM_ProjectBall(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto ball = FeasibleSet::Ball(Eigen::VectorXd::Zero(d), 1.0);
  const Eigen::VectorXd x = Eigen::VectorXd::Constant(d, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(ball.Project(x).data());
}
BENCHMARK(BM_ProjectBall)->Arg(5)->Arg(576);

void BM_ProjectBox(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto box = FeasibleSet::Box(Eigen::VectorXd::Constant(d, -1), Eigen::VectorXd::Ones(d));
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(d, -3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(box.Project(x).data());
}
BENCHMARK(BM_ProjectBox)->Arg(5)->Arg(576);

void BM_LqrRollout(benchmark::State& state) {
  const LqrEnv env(state.range(0) == 0 ? LqrDeskPreset() : LqrPaperPreset());
  const Eigen::VectorXd k = Eigen::VectorXd::Zero(env.dimension());
  std::uint64_t key = 0;
  for (auto _ : state) benchmark::DoNotOptimize(env.Rollout(k, key++));
}
BENCHMARK(BM_LqrRollout)->Arg(0)->Arg(1);

void BM_GridSimulate(benchmark::State& state) {
  const ResourceGridEnv env(state.range(0) == 0 ? GridDeskPreset() : GridPaperPreset());
  const Eigen::VectorXd theta = Eigen::VectorXd::Constant(env.dimension(), 0.01);
  std::uint64_t key = 0;
  for (auto _ : state) benchmark::DoNotOptimize(env.Simulate(theta, key++).cost);
}
BENCHMARK(BM_GridSimulate)->Arg(0)->Arg(1);

void BM_OptimizerStep(benchmark::State& state) {
  const int d = 5;
  auto problem = MakeDriftingQuadratic(d, 0.01, Eigen::VectorXd::Zero(d), 2);
  OptimizerConfig c;
  c.estimator = static_cast<EstimatorKind>(state.range(0));
  c.eta = 1e-3;
  c.delta = 0.1;
  c.horizon = std::int64_t{1} << 40;
  c.set = FeasibleSet::Ball(Eigen::VectorXd::Zero(d), 1.0);
  c.x0 = Eigen::VectorXd::Zero(d);
  c.record_iterates = false;
  ZoOptimizer opt(*problem, c);
  for (auto _ : state) benchmark::DoNotOptimize(opt.Step().y);
  state.SetLabel(std::string(EstimatorName(c.estimator)));
}
BENCHMARK(BM_OptimizerStep)
    ->Arg(static_cast<int>(EstimatorKind::kResidual))
    ->Arg(static_cast<int>(EstimatorKind::kTwoPoint));

}  // namespace
}  // namespace zo

BENCHMARK_MAIN();
