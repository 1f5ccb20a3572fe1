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

#include "zo/smoothing.h"

#include <cmath>

#include "zo/errors.h"

namespace zo {

McEstimate SmoothedValueMc(const ValueOracle& f, const Eigen::VectorXd& x,
                           const SmoothingSpec& spec, RandomStream& rng) {
  if (!(spec.delta > 0.0)) throw ConfigError("smoothing delta must be positive");
  if (spec.samples < 1) throw ConfigError("smoothing needs at least one sample");
  const int d = static_cast<int>(x.size());

  // Welford accumulation.
  double mean = 0.0;
  double m2 = 0.0;
  for (int n = 1; n <= spec.samples; ++n) {
    const Eigen::VectorXd v = spec.kernel == SmoothingKernel::kGaussian
                                  ? SampleGaussianDirection(rng, d).components
                                  : SampleUnitBall(rng, d);
    const double value = f(x + spec.delta * v);
    CheckFiniteQuery(value, "smoothed value");
    const double diff = value - mean;
    mean += diff / n;
    m2 += diff * (value - mean);
  }
  McEstimate out;
  out.estimate = mean;
  out.std_error =
      spec.samples > 1 ? std::sqrt(m2 / (spec.samples - 1) / spec.samples) : 0.0;
  return out;
}

McVectorEstimate SmoothedGradientMc(const ValueOracle& f, const Eigen::VectorXd& x, double delta,
                                    int samples, RandomStream& rng) {
  if (!(delta > 0.0)) throw ConfigError("smoothing delta must be positive");
  if (samples < 1) throw ConfigError("smoothing needs at least one sample");
  const int d = static_cast<int>(x.size());
  const double base = f(x);
  CheckFiniteQuery(base, "smoothed gradient");

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd m2 = Eigen::VectorXd::Zero(d);
  for (int n = 1; n <= samples; ++n) {
    const Direction u = SampleGaussianDirection(rng, d);
    const double value = f(x + delta * u.components);
    CheckFiniteQuery(value, "smoothed gradient");
    const Eigen::VectorXd g = ((value - base) / delta) * u.components;
    const Eigen::VectorXd diff = g - mean;
    mean += diff / n;
    m2 += diff.cwiseProduct(g - mean);
  }
  McVectorEstimate out;
  out.estimate = mean;
  out.std_error = samples > 1 ? (m2 / (samples - 1.0) / samples).cwiseSqrt().eval()
                              : Eigen::VectorXd::Zero(d);
  return out;
}

double SmoothingGapBound(FunctionClass func_class, double lipschitz, double delta, int d,
                         SmoothingKernel kernel) {
  if (kernel == SmoothingKernel::kGaussian) {
    return func_class == FunctionClass::kLipschitz ? delta * lipschitz * std::sqrt(d)
                                                   : delta * delta * lipschitz * d;
  }
  return func_class == FunctionClass::kLipschitz ? delta * lipschitz
                                                 : delta * delta * lipschitz;
}

double SmoothedGradientGapBound(double smooth_l1, double delta, int d) {
  return delta * smooth_l1 * std::pow(d + 3.0, 1.5);
}

double SmoothedLipschitzConstant(double l0, double delta, int d) {
  if (!(delta > 0.0)) throw ConfigError("smoothing delta must be positive");
  return std::sqrt(static_cast<double>(d)) * l0 / delta;
}

}  // namespace zo
