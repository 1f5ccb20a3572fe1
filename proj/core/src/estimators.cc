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

#include "zo/estimators.h"

#include <cmath>
#include <string>

#include "zo/errors.h"

namespace zo {

std::string_view EstimatorName(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kResidual:
      return "residual";
    case EstimatorKind::kOnePoint:
      return "one_point";
    case EstimatorKind::kTwoPoint:
      return "two_point";
    case EstimatorKind::kNaiveOnlineTwoPoint:
      return "naive_online_two_point";
    case EstimatorKind::kResidualSphere:
      return "residual_sphere";
  }
  return "unknown";
}

EstimatorKind ParseEstimatorKind(std::string_view name) {
  for (EstimatorKind kind :
       {EstimatorKind::kResidual, EstimatorKind::kOnePoint, EstimatorKind::kTwoPoint,
        EstimatorKind::kNaiveOnlineTwoPoint, EstimatorKind::kResidualSphere}) {
    if (EstimatorName(kind) == name) return kind;
  }
  throw ConfigError("unknown estimator '" + std::string(name) + "'");
}

int QueriesPerStep(EstimatorKind kind) {
  return (kind == EstimatorKind::kTwoPoint || kind == EstimatorKind::kNaiveOnlineTwoPoint) ? 2
                                                                                           : 1;
}

DirectionKind DirectionKindFor(EstimatorKind kind) {
  return kind == EstimatorKind::kResidualSphere ? DirectionKind::kSphere
                                                : DirectionKind::kGaussian;
}

void CheckFiniteQuery(double value, std::string_view where) {
  if (!std::isfinite(value)) {
    throw QueryError(std::string(where) + ": objective query returned a non-finite value");
  }
}

namespace {

void CheckDelta(double delta) {
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
}

void CheckPoint(const Eigen::VectorXd& x, const Direction& u) {
  if (x.size() != u.components.size()) {
    throw DimensionError("point has dimension " + std::to_string(x.size()) +
                         " but direction has " + std::to_string(u.components.size()));
  }
}

ResidualStepResult Advance(const ResidualState& state, double y_t, const Direction& u_t,
                           double scale) {
  if (state.initialized && state.prev_direction.dimension() != u_t.dimension()) {
    throw StateError("direction dimension changed from " +
                     std::to_string(state.prev_direction.dimension()) + " to " +
                     std::to_string(u_t.dimension()));
  }
  if (state.initialized != (state.step_index > 0)) {
    throw StateError("residual state is inconsistent: initialized flag disagrees with step index");
  }
  CheckFiniteQuery(y_t, "residual step");
  const double baseline = state.initialized ? state.prev_value : 0.0;

  ResidualStepResult result;
  result.estimate.vector = (scale * (y_t - baseline)) * u_t.components;
  result.estimate.queries_used = 1;
  result.estimate.raw_value = y_t;
  result.next.prev_value = y_t;
  result.next.prev_direction = u_t;
  result.next.step_index = state.step_index + 1;
  result.next.initialized = true;
  return result;
}

}  // namespace

GradientEstimate TwoPoint(const ValueOracle& query, const Eigen::VectorXd& x, double delta,
                          const Direction& u) {
  CheckDelta(delta);
  CheckPoint(x, u);
  const double plus = query(x + delta * u.components);
  CheckFiniteQuery(plus, "two-point");
  const double base = query(x);
  CheckFiniteQuery(base, "two-point");
  GradientEstimate g;
  g.vector = ((plus - base) / delta) * u.components;
  g.queries_used = 2;
  g.raw_value = plus;
  return g;
}

GradientEstimate OnePoint(const ValueOracle& query, const Eigen::VectorXd& x, double delta,
                          const Direction& u) {
  CheckDelta(delta);
  CheckPoint(x, u);
  const double value = query(x + delta * u.components);
  CheckFiniteQuery(value, "one-point");
  GradientEstimate g;
  g.vector = (value / delta) * u.components;
  g.queries_used = 1;
  g.raw_value = value;
  return g;
}

ResidualStepResult ResidualStep(const ResidualState& state, double y_t, const Direction& u_t,
                                double delta) {
  CheckDelta(delta);
  return Advance(state, y_t, u_t, 1.0 / delta);
}

ResidualStepResult ResidualStepSphere(const ResidualState& state, double y_t,
                                      const Direction& u_t, double delta, int d) {
  CheckDelta(delta);
  if (d != u_t.dimension()) {
    throw DimensionError("sphere step: d = " + std::to_string(d) + " but direction has " +
                         std::to_string(u_t.dimension()) + " components");
  }
  if (std::abs(u_t.components.norm() - 1.0) > 1e-9) {
    throw DirectionKindError("sphere residual step requires a unit-norm direction");
  }
  return Advance(state, y_t, u_t, static_cast<double>(d) / delta);
}

ResidualStepResult StochasticResidualStep(const ResidualState& state, double y_t,
                                          const Direction& u_t, double delta) {
  return ResidualStep(state, y_t, u_t, delta);
}

GradientEstimate NaiveOnlineTwoPointFromValues(double value_plus_current,
                                               double value_minus_previous, double delta,
                                               const Direction& u) {
  CheckDelta(delta);
  CheckFiniteQuery(value_plus_current, "naive online two-point");
  CheckFiniteQuery(value_minus_previous, "naive online two-point");
  GradientEstimate g;
  g.vector = ((value_plus_current - value_minus_previous) / (2.0 * delta)) * u.components;
  g.queries_used = 2;
  g.raw_value = value_plus_current;
  return g;
}

GradientEstimate NaiveOnlineTwoPoint(const ValueOracle& current, const ValueOracle& previous,
                                     const Eigen::VectorXd& x, double delta, const Direction& u) {
  CheckDelta(delta);
  CheckPoint(x, u);
  const double plus = current(x + delta * u.components);
  const double minus = previous(x - delta * u.components);
  return NaiveOnlineTwoPointFromValues(plus, minus, delta, u);
}

}  // namespace zo
