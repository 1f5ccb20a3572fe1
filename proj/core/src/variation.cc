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

#include "zo/variation.h"

#include <cmath>

#include "zo/errors.h"

namespace zo {

VariationProbe::VariationProbe(int smoothing_samples, std::uint64_t seed)
    : samples_(smoothing_samples), rng_(seed) {
  if (smoothing_samples < 0) throw ConfigError("smoothing_samples must be non-negative");
}

void VariationProbe::BeforeAdvance(const OnlineProblem& problem, const StepContext& step) {
  // Compared here rather than right after Advance(): some problems (the
  // adversary) only commit f_t once step t has been queried.
  if (pending_) {
    increments_.push_back(problem.TrueCost(last_query_) - before_query_);
    if (samples_ > 0) {
      double diff = 0.0;
      for (int i = 0; i < samples_; ++i) {
        diff += problem.TrueCost(perturbed_[i]) - before_smoothed_[i];
      }
      w_hat_ += std::abs(diff / samples_);
    }
  }
  pending_ = true;
  last_query_ = *step.query_point;
  before_query_ = problem.TrueCost(last_query_);
  // Common samples around x_{t+1}, the point the next step will smooth at.
  perturbed_.clear();
  before_smoothed_.clear();
  for (int i = 0; i < samples_; ++i) {
    const Direction u = SampleGaussianDirection(rng_, problem.dimension());
    perturbed_.push_back(*step.next_x + step.delta * u.components);
    before_smoothed_.push_back(problem.TrueCost(perturbed_.back()));
  }
}

VariationEstimates VariationProbe::estimates() const {
  VariationEstimates e;
  e.transitions = static_cast<std::int64_t>(increments_.size());
  for (double v : increments_) e.w_tilde_hat += v * v;
  if (e.transitions > 0) e.vf_hat = std::sqrt(e.w_tilde_hat / e.transitions);
  e.w_hat = w_hat_;
  return e;
}

}  // namespace zo
