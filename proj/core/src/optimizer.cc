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
#include <utility>

#include "zo/schedules.h"

namespace zo {

namespace {

void ValidateConfig(const OnlineProblem& problem, const OptimizerConfig& config) {
  if (!(config.eta >= 0.0) || !std::isfinite(config.eta)) {
    throw ConfigError("eta must be a finite non-negative number");
  }
  if (!(config.delta > 0.0) || !std::isfinite(config.delta)) {
    throw ConfigError("delta must be positive");
  }
  if (config.horizon < 1) throw ConfigError("horizon must be >= 1");
  if (config.set.dimension() != problem.dimension()) {
    throw DimensionError("feasible set has dimension " + std::to_string(config.set.dimension()) +
                         ", problem has " + std::to_string(problem.dimension()));
  }
  if (config.x0.size() != problem.dimension()) {
    throw DimensionError("x0 must be given with the problem's dimension");
  }
  if (QueriesPerStep(config.estimator) == 2 && !problem.capabilities().supports_double_query) {
    throw ContractError(std::string(EstimatorName(config.estimator)) +
                        " needs two queries per step, which this problem does not allow");
  }
  if (config.estimator == EstimatorKind::kResidualSphere &&
      !FeasibilityMargin(config.set, config.xi, config.delta)) {
    throw ConfigError("residual_sphere needs 1 >= xi >= delta / r");
  }
  if (problem.time() != 0) throw StateError("optimizer must start on a problem at t = 0");
}

FeasibleSet IterateSet(const OptimizerConfig& config) {
  if (config.estimator == EstimatorKind::kResidualSphere) return config.set.Shrink(config.xi);
  return config.set;
}

bool AllFinite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

Eigen::VectorXd ProjectedUpdate(const FeasibleSet& set, const Eigen::VectorXd& x,
                                const Eigen::VectorXd& g, double eta) {
  if (x.size() != g.size()) throw DimensionError("update: point and estimate sizes differ");
  return set.Project(x - eta * g);
}

ZoOptimizer::ZoOptimizer(OnlineProblem& problem, OptimizerConfig config)
    : problem_(problem),
      config_(std::move(config)),
      iterate_set_((ValidateConfig(problem, config_), IterateSet(config_))),
      directions_(config_.seed) {
  x_ = iterate_set_.Project(config_.x0);
  trace_.config = config_;
  trace_.config.observer = nullptr;
  trace_.steps.reserve(static_cast<std::size_t>(config_.horizon));
  if (const auto& l0 = problem.capabilities().lipschitz_l0) {
    const DirectionKernel kernel = config_.estimator == EstimatorKind::kResidualSphere
                                       ? DirectionKernel::kSphere
                                       : DirectionKernel::kGaussian;
    trace_.contraction_rate =
        ContractionRate(*l0, config_.eta, config_.delta, problem.dimension(), kernel);
    trace_.contraction_warning = *trace_.contraction_rate > 1.0;
  }
}

GradientEstimate ZoOptimizer::Estimate(const Direction& u, Eigen::VectorXd* query_point) {
  const double delta = config_.delta;
  *query_point = x_ + delta * u.components;
  const auto query = [&](const Eigen::VectorXd& p) {
    const double y = problem_.Query(t_, p);
    CheckFiniteQuery(y, EstimatorName(config_.estimator));
    return y;
  };
  switch (config_.estimator) {
    case EstimatorKind::kResidual: {
      auto result = ResidualStep(residual_, query(*query_point), u, delta);
      residual_ = std::move(result.next);
      return result.estimate;
    }
    case EstimatorKind::kResidualSphere: {
      auto result =
          ResidualStepSphere(residual_, query(*query_point), u, delta, problem_.dimension());
      residual_ = std::move(result.next);
      return result.estimate;
    }
    case EstimatorKind::kOnePoint:
      return OnePoint(query, x_, delta, u);
    case EstimatorKind::kTwoPoint: {
      const auto [plus, base] = problem_.QueryPair(t_, *query_point, x_);
      CheckFiniteQuery(plus, "two_point");
      CheckFiniteQuery(base, "two_point");
      GradientEstimate g;
      g.vector = u.components * ((plus - base) / delta);
      g.queries_used = 2;
      g.raw_value = plus;
      return g;
    }
    case EstimatorKind::kNaiveOnlineTwoPoint: {
      // The lookback f_{t-1}(x_t - delta u_t) was taken last step; at t = 0
      // there is none and the baseline is 0, as for residual feedback.
      const double plus = query(*query_point);
      GradientEstimate g =
          NaiveOnlineTwoPointFromValues(plus, lookback_value_.value_or(0.0), delta, u);
      return g;
    }
  }
  throw ConfigError("unknown estimator");
}

const StepRecord& ZoOptimizer::Step() {
  if (t_ >= config_.horizon) throw StateError("optimizer already reached its horizon");
  const std::int64_t queries_before = problem_.total_queries();
  StepRecord record;
  record.t = t_;
  record.x_norm = x_.norm();
  if (config_.record_iterates) record.x = x_;
  try {
    Direction u = next_direction_ ? std::move(*next_direction_)
                                  : SampleDirection(directions_, problem_.dimension(),
                                                    DirectionKindFor(config_.estimator));
    next_direction_.reset();
    Eigen::VectorXd query_point;
    GradientEstimate g = Estimate(u, &query_point);
    if (!AllFinite(g.vector)) throw QueryError("gradient estimate is not finite");
    record.y = g.raw_value;
    record.estimate_sq_norm = g.vector.squaredNorm();
    if (config_.record_iterates) record.query_point = query_point;
    if (config_.record_estimates) record.estimate = g.vector;
    if (problem_.capabilities().exposes_true_cost) record.realized_cost = problem_.TrueCost(x_);
    if (problem_.capabilities().exposes_gradient) {
      record.gradient_sq_norm = problem_.Gradient(x_).squaredNorm();
    }

    Eigen::VectorXd next = ProjectedUpdate(iterate_set_, x_, g.vector, config_.eta);
    if (!AllFinite(next)) throw QueryError("iterate is not finite");

    if (config_.estimator == EstimatorKind::kNaiveOnlineTwoPoint) {
      Direction ahead = SampleDirection(directions_, problem_.dimension(), DirectionKind::kGaussian);
      const double back = problem_.Query(t_, next - config_.delta * ahead.components);
      CheckFiniteQuery(back, "naive_online_two_point");
      lookback_value_ = back;
      next_direction_ = std::move(ahead);
    }

    StepContext ctx{t_, &x_, &query_point, &next, config_.delta};
    if (config_.observer) config_.observer->BeforeAdvance(problem_, ctx);
    problem_.Advance();
    if (config_.observer) config_.observer->AfterAdvance(problem_, ctx);
    x_ = std::move(next);
  } catch (const QueryError& e) {
    record.queries_used = static_cast<int>(problem_.total_queries() - queries_before);
    trace_.total_queries += record.queries_used;
    trace_.steps.push_back(std::move(record));
    trace_.final_x = x_;
    throw RunAborted("run aborted at t=" + std::to_string(t_) + ": " + e.what(), trace_);
  }
  record.queries_used = static_cast<int>(problem_.total_queries() - queries_before);
  trace_.total_queries += record.queries_used;
  trace_.steps.push_back(std::move(record));
  ++t_;
  trace_.final_x = x_;
  return trace_.steps.back();
}

RunTrace ZoOptimizer::Run() {
  while (t_ < config_.horizon) Step();
  trace_.final_x = x_;
  return trace_;
}

RunTrace RunOptimizer(OnlineProblem& problem, const OptimizerConfig& config) {
  return ZoOptimizer(problem, config).Run();
}

}  // namespace zo
