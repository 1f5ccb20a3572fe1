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

// The online zeroth-order loop
//
//   x_{t+1} = Proj_X(x_t - eta g_t)
//
// with g_t from one of the estimators. The unit-sphere residual variant
// iterates on (1 - xi) X so that every query x_t + delta u_t stays in X.

#ifndef ZO_OPTIMIZER_H_
#define ZO_OPTIMIZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "zo/errors.h"
#include "zo/estimators.h"
#include "zo/feasible_set.h"
#include "zo/problem.h"
#include "zo/sampling.h"

namespace zo {

// What the loop knows at the end of step t, just before the problem advances.
struct StepContext {
  std::int64_t t = 0;
  const Eigen::VectorXd* x = nullptr;            // x_t
  const Eigen::VectorXd* query_point = nullptr;  // x_t + delta u_t
  const Eigen::VectorXd* next_x = nullptr;       // x_{t+1}
  double delta = 0.0;
};

// Metrics-side hook; may call TrueCost on the problem but never Query.
class StepObserver {
 public:
  virtual ~StepObserver() = default;
  virtual void BeforeAdvance(const OnlineProblem& problem, const StepContext& step) {}
  virtual void AfterAdvance(const OnlineProblem& problem, const StepContext& step) {}
};

struct OptimizerConfig {
  EstimatorKind estimator = EstimatorKind::kResidual;
  double eta = 0.0;
  double delta = 0.0;
  // Shrink factor, residual_sphere only.
  double xi = 0.0;
  std::int64_t horizon = 1;
  FeasibleSet set = FeasibleSet::Unconstrained(1);
  std::uint64_t seed = 0;
  // Starting point, projected onto the iterate set.
  Eigen::VectorXd x0;

  bool record_iterates = true;
  bool record_estimates = false;
  StepObserver* observer = nullptr;
};

struct StepRecord {
  std::int64_t t = 0;
  Eigen::VectorXd x;            // empty unless record_iterates
  Eigen::VectorXd query_point;  // empty unless record_iterates
  double x_norm = 0.0;
  double y = 0.0;
  double estimate_sq_norm = 0.0;
  // f_t(x_t) and |grad f_t(x_t)|^2 from the metrics-only oracles, when exposed.
  std::optional<double> realized_cost;
  std::optional<double> gradient_sq_norm;
  int queries_used = 0;
  Eigen::VectorXd estimate;  // empty unless record_estimates
};

struct RunTrace {
  std::vector<StepRecord> steps;
  Eigen::VectorXd final_x;
  OptimizerConfig config;  // echo; observer cleared
  std::int64_t total_queries = 0;
  // Contraction rate 4 d L0^2 eta^2 / delta^2 (d^2 for sphere directions)
  // when the problem reports L0; the flag is raised when it exceeds 1.
  std::optional<double> contraction_rate;
  bool contraction_warning = false;
};

// A non-finite objective value or iterate stopped the run. Carries everything
// recorded up to that point.
class RunAborted : public Error {
 public:
  RunAborted(const std::string& what, RunTrace partial)
      : Error(what), partial_(std::move(partial)) {}
  const RunTrace& partial() const { return partial_; }

 private:
  RunTrace partial_;
};

// Proj_set(x - eta g).
Eigen::VectorXd ProjectedUpdate(const FeasibleSet& set, const Eigen::VectorXd& x,
                                const Eigen::VectorXd& g, double eta);

// Single-transition driver over one problem instance. The problem must be at
// time 0 when the optimizer is constructed.
class ZoOptimizer {
 public:
  ZoOptimizer(OnlineProblem& problem, OptimizerConfig config);

  // Runs step t = time(): sample, query, estimate, update, advance.
  const StepRecord& Step();
  // Steps until the horizon is reached and returns the trace.
  RunTrace Run();

  std::int64_t time() const { return t_; }
  const Eigen::VectorXd& x() const { return x_; }
  const FeasibleSet& iterate_set() const { return iterate_set_; }
  const ResidualState& residual_state() const { return residual_; }
  const RunTrace& trace() const { return trace_; }

 private:
  GradientEstimate Estimate(const Direction& u, Eigen::VectorXd* query_point);

  OnlineProblem& problem_;
  OptimizerConfig config_;
  FeasibleSet iterate_set_;
  RandomStream directions_;
  Eigen::VectorXd x_;
  std::int64_t t_ = 0;
  ResidualState residual_;
  // Look-ahead for the naive online two-point estimator: u_{t+1} and
  // f_t(x_{t+1} - delta u_{t+1}), taken before the problem advances.
  std::optional<Direction> next_direction_;
  std::optional<double> lookback_value_;
  RunTrace trace_;
};

// Convenience: ZoOptimizer(problem, config).Run().
RunTrace RunOptimizer(OnlineProblem& problem, const OptimizerConfig& config);

}  // namespace zo

#endif  // ZO_OPTIMIZER_H_
