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

// Zeroth-order gradient estimators.
//
// Each estimator consumes exactly the objective values it is allowed per time
// step. The residual estimators never query the objective themselves: the
// caller takes the single query y_t = f_t(x_t + delta u_t) and hands it in,
// which keeps the one-query-per-step discipline visible at the call site.
//
//   two-point     g = (u / delta) (f_t(x + delta u) - f_t(x))           2 queries
//   one-point     g = (u / delta) f_t(x + delta u)                      1 query
//   residual      g = (u_t / delta) (y_t - y_{t-1})                     1 query
//   sphere        g = (d / delta) (y_t - y_{t-1}) u_t, |u_t| = 1        1 query
//   naive online  g = (u / 2 delta) (f_t(x + delta u) - f_{t-1}(x - delta u))
//
// The last one is biased whenever f_t - f_{t-1} depends on the query point;
// it exists as a diagnostic and can only be evaluated in simulation.

#ifndef ZO_ESTIMATORS_H_
#define ZO_ESTIMATORS_H_

#include <cstdint>
#include <functional>
#include <string_view>

#include <Eigen/Core>

#include "zo/sampling.h"

namespace zo {

// Value oracle for a fixed time step.
using ValueOracle = std::function<double(const Eigen::VectorXd&)>;

enum class EstimatorKind {
  kResidual,
  kOnePoint,
  kTwoPoint,
  kNaiveOnlineTwoPoint,
  kResidualSphere,
};

std::string_view EstimatorName(EstimatorKind kind);
// Throws ConfigError on unknown names.
EstimatorKind ParseEstimatorKind(std::string_view name);
int QueriesPerStep(EstimatorKind kind);
DirectionKind DirectionKindFor(EstimatorKind kind);

struct GradientEstimate {
  Eigen::VectorXd vector;
  int queries_used = 1;
  // The objective value sampled this step (the first query for two-point).
  double raw_value = 0.0;
};

// Carries y_{t-1} and u_{t-1} between steps.
struct ResidualState {
  double prev_value = 0.0;
  Direction prev_direction;
  std::int64_t step_index = 0;
  bool initialized = false;
};

struct ResidualStepResult {
  GradientEstimate estimate;
  ResidualState next;
};

GradientEstimate TwoPoint(const ValueOracle& query, const Eigen::VectorXd& x, double delta,
                          const Direction& u);

GradientEstimate OnePoint(const ValueOracle& query, const Eigen::VectorXd& x, double delta,
                          const Direction& u);

// On the first step there is no y_{-1}; the baseline is 0, so the first
// estimate coincides with the one-point estimate.
ResidualStepResult ResidualStep(const ResidualState& state, double y_t, const Direction& u_t,
                                double delta);

// Unit-sphere variant. Throws DirectionKindError unless |u_t| = 1 to 1e-9.
ResidualStepResult ResidualStepSphere(const ResidualState& state, double y_t,
                                      const Direction& u_t, double delta, int d);

// Same arithmetic as ResidualStep; y_t is a noisy sample F_t(x_t + delta u_t; xi_t).
ResidualStepResult StochasticResidualStep(const ResidualState& state, double y_t,
                                          const Direction& u_t, double delta);

// `current` evaluates f_t, `previous` evaluates f_{t-1}.
GradientEstimate NaiveOnlineTwoPoint(const ValueOracle& current, const ValueOracle& previous,
                                     const Eigen::VectorXd& x, double delta, const Direction& u);

// Same estimator from already-sampled values f_t(x + delta u), f_{t-1}(x - delta u).
GradientEstimate NaiveOnlineTwoPointFromValues(double value_plus_current,
                                               double value_minus_previous, double delta,
                                               const Direction& u);

// Throws QueryError if `value` is not finite.
void CheckFiniteQuery(double value, std::string_view where);

}  // namespace zo

#endif  // ZO_ESTIMATORS_H_
