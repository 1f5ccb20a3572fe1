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

// Plug-in estimates of how fast an objective sequence moves, measured along a
// run through the metrics-only TrueCost oracle:
//
//   V_f^2    mean_t (f_t(z_{t-1}) - f_{t-1}(z_{t-1}))^2,  z = x + delta u the query point
//   W_T      sum_t |f_{delta,t}(x_t) - f_{delta,t-1}(x_t)|  (Monte Carlo, common samples)
//   W~_T     sum_t (f_t(z_{t-1}) - f_{t-1}(z_{t-1}))^2

#ifndef ZO_VARIATION_H_
#define ZO_VARIATION_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "zo/optimizer.h"
#include "zo/sampling.h"

namespace zo {

struct VariationEstimates {
  double vf_hat = 0.0;       // sqrt of the mean squared per-step variation
  double w_hat = 0.0;
  double w_tilde_hat = 0.0;
  std::int64_t transitions = 0;
};

// Attach to OptimizerConfig::observer. Requires a problem exposing TrueCost.
class VariationProbe : public StepObserver {
 public:
  // `smoothing_samples` Gaussian directions are drawn per step for W_T; 0
  // skips the smoothed statistic.
  explicit VariationProbe(int smoothing_samples = 32, std::uint64_t seed = 0);

  void BeforeAdvance(const OnlineProblem& problem, const StepContext& step) override;

  VariationEstimates estimates() const;
  // (f_t - f_{t-1}) at each previous query point, t = 1..T-1.
  const std::vector<double>& increments() const { return increments_; }

 private:
  int samples_;
  RandomStream rng_;
  bool pending_ = false;
  Eigen::VectorXd last_query_;
  double before_query_ = 0.0;
  std::vector<Eigen::VectorXd> perturbed_;
  std::vector<double> before_smoothed_;
  std::vector<double> increments_;
  double w_hat_ = 0.0;
};

}  // namespace zo

#endif  // ZO_VARIATION_H_
