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

// Monte-Carlo oracles for the smoothed function
//   f_delta(x) = E[f(x + delta v)],  v ~ N(0, I) or v ~ Unif(unit ball)
// and the closed-form gaps |f_delta - f| used to check estimators against it.

#ifndef ZO_SMOOTHING_H_
#define ZO_SMOOTHING_H_

#include <Eigen/Core>

#include "zo/estimators.h"
#include "zo/sampling.h"

namespace zo {

enum class SmoothingKernel { kGaussian, kUnitBall };
enum class FunctionClass { kLipschitz, kSmooth };  // C^{0,0}, C^{1,1}

struct SmoothingSpec {
  double delta = 0.0;
  SmoothingKernel kernel = SmoothingKernel::kGaussian;
  int samples = 1;
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

struct McVectorEstimate {
  Eigen::VectorXd estimate;
  Eigen::VectorXd std_error;  // per component
};

// Sample mean of f(x + delta v). Throws ConfigError on an invalid spec and
// QueryError on a non-finite sample.
McEstimate SmoothedValueMc(const ValueOracle& f, const Eigen::VectorXd& x,
                           const SmoothingSpec& spec, RandomStream& rng);

// Gaussian-kernel gradient of f_delta, as the mean of (u/delta)(f(x+delta u) - f(x)).
McVectorEstimate SmoothedGradientMc(const ValueOracle& f, const Eigen::VectorXd& x, double delta,
                                    int samples, RandomStream& rng);

// Worst-case |f_delta(x) - f(x)|:
//   gaussian: delta L0 sqrt(d)  (C00),  delta^2 L1 d  (C11)
//   ball:     delta L0          (C00),  delta^2 L1    (C11)
double SmoothingGapBound(FunctionClass func_class, double lipschitz, double delta, int d,
                         SmoothingKernel kernel);

// Worst-case |grad f_delta - grad f| = delta L1 (d + 3)^{3/2} for C11 under the
// Gaussian kernel.
double SmoothedGradientGapBound(double smooth_l1, double delta, int d);

// f_delta is C11 with constant sqrt(d) L0 / delta when f is L0-Lipschitz.
double SmoothedLipschitzConstant(double l0, double delta, int d);

}  // namespace zo

#endif  // ZO_SMOOTHING_H_
