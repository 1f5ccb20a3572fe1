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

// Regret, estimator variance and growth-exponent fits over run traces.

#ifndef ZO_METRICS_H_
#define ZO_METRICS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "zo/optimizer.h"
#include "zo/sampling.h"

namespace zo {

enum class RegretKind { kStatic, kGradientSq, kGradientSqSmoothed };

struct RegretSeries {
  Eigen::VectorXd cumulative;
  double comparator_value = 0.0;
  RegretKind kind = RegretKind::kStatic;
};

// costs[trial][t] = f_t(x_t). cumulative[t] = mean over trials of
// sum_{s<=t} (f_s(x_s) - comparator_per_step). Throws DimensionError on
// ragged input.
RegretSeries StaticRegret(const std::vector<std::vector<double>>& costs,
                          double comparator_per_step);
// Same with a time-varying comparator cost f_s(x*) per step.
RegretSeries StaticRegret(const std::vector<std::vector<double>>& costs,
                          const std::vector<double>& comparator_costs);

using TimedGradientOracle = std::function<Eigen::VectorXd(std::int64_t, const Eigen::VectorXd&)>;

struct SmoothedGradientOptions {
  double delta = 0.0;
  int samples = 0;
  RandomStream* rng = nullptr;
};

// cumulative[t] = sum_{s<=t} |grad f_s(x_s)|^2. With `smoothed`, grad f_delta
// is estimated as the mean of (grad f(x + delta u) + grad f(x - delta u)) / 2
// over `samples` Gaussian u; the antithetic pairing makes it exact whenever
// the gradient is affine.
RegretSeries GradientRegret(const std::vector<Eigen::VectorXd>& iterates,
                            const TimedGradientOracle& gradient, bool smoothed = false,
                            const SmoothedGradientOptions& smoothing = {});
// From the per-step |grad f_t(x_t)|^2 already recorded in a trace.
RegretSeries GradientRegret(const RunTrace& trace);

// estimates[trial][t] -> per-step trace of the unbiased sample covariance of
// the estimate vectors across trials. Needs at least two trials.
Eigen::VectorXd EstimatorVariance(const std::vector<std::vector<Eigen::VectorXd>>& estimates);

// Streaming form: per-step Welford accumulation, one trial at a time.
class VarianceAccumulator {
 public:
  explicit VarianceAccumulator(std::int64_t steps);
  // Adds the estimate of one trial at step t.
  void Add(std::int64_t t, const Eigen::VectorXd& estimate);
  Eigen::VectorXd Variance() const;
  std::int64_t steps() const { return static_cast<std::int64_t>(count_.size()); }

 private:
  std::vector<std::int64_t> count_;
  std::vector<Eigen::VectorXd> mean_;
  std::vector<double> m2_;  // summed over components
};

// Least-squares slope of log(series[i]) against log(i + 1) over indices
// i >= burn_in. burn_in < 0 means the first 10% of the series. Every fitted
// entry must be positive.
double LogLogSlope(const std::vector<double>& series, std::int64_t burn_in = -1);
double LogLogSlope(const Eigen::VectorXd& series, std::int64_t burn_in = -1);

// Mean and unbiased standard deviation across trials, per step.
struct StepStatistics {
  std::vector<double> mean;
  std::vector<double> std;
};
StepStatistics AcrossTrials(const std::vector<std::vector<double>>& values);

}  // namespace zo

#endif  // ZO_METRICS_H_
