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

#include "zo/metrics.h"

#include <cmath>
#include <string>

#include "zo/errors.h"

namespace zo {

namespace {

std::size_t CommonLength(const std::vector<std::vector<double>>& values) {
  if (values.empty()) throw DimensionError("no trials given");
  const std::size_t n = values.front().size();
  for (const auto& v : values) {
    if (v.size() != n) throw DimensionError("trials have different lengths");
  }
  return n;
}

}  // namespace

RegretSeries StaticRegret(const std::vector<std::vector<double>>& costs,
                          double comparator_per_step) {
  const std::size_t n = CommonLength(costs);
  return StaticRegret(costs, std::vector<double>(n, comparator_per_step));
}

RegretSeries StaticRegret(const std::vector<std::vector<double>>& costs,
                          const std::vector<double>& comparator_costs) {
  const std::size_t n = CommonLength(costs);
  if (comparator_costs.size() != n) {
    throw DimensionError("comparator series has length " + std::to_string(comparator_costs.size()) +
                         ", traces have " + std::to_string(n));
  }
  RegretSeries r;
  r.kind = RegretKind::kStatic;
  r.cumulative = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  double comparator_total = 0.0;
  for (const auto& trial : costs) {
    double running = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      running += trial[t] - comparator_costs[t];
      r.cumulative[static_cast<Eigen::Index>(t)] += running;
    }
  }
  r.cumulative /= static_cast<double>(costs.size());
  for (double c : comparator_costs) comparator_total += c;
  r.comparator_value = comparator_total;
  return r;
}

RegretSeries GradientRegret(const std::vector<Eigen::VectorXd>& iterates,
                            const TimedGradientOracle& gradient, bool smoothed,
                            const SmoothedGradientOptions& smoothing) {
  if (smoothed && (smoothing.samples < 1 || !smoothing.rng || !(smoothing.delta > 0.0))) {
    throw ConfigError("smoothed gradient regret needs delta > 0, samples >= 1 and a stream");
  }
  RegretSeries r;
  r.kind = smoothed ? RegretKind::kGradientSqSmoothed : RegretKind::kGradientSq;
  r.cumulative.resize(static_cast<Eigen::Index>(iterates.size()));
  double running = 0.0;
  for (std::size_t t = 0; t < iterates.size(); ++t) {
    const auto& x = iterates[t];
    const auto s = static_cast<std::int64_t>(t);
    Eigen::VectorXd g;
    if (!smoothed) {
      g = gradient(s, x);
    } else {
      g = Eigen::VectorXd::Zero(x.size());
      for (int i = 0; i < smoothing.samples; ++i) {
        const Direction u = SampleGaussianDirection(*smoothing.rng, static_cast<int>(x.size()));
        const Eigen::VectorXd step = smoothing.delta * u.components;
        g += 0.5 * (gradient(s, x + step) + gradient(s, x - step));
      }
      g /= static_cast<double>(smoothing.samples);
    }
    running += g.squaredNorm();
    r.cumulative[static_cast<Eigen::Index>(t)] = running;
  }
  return r;
}

RegretSeries GradientRegret(const RunTrace& trace) {
  RegretSeries r;
  r.kind = RegretKind::kGradientSq;
  r.cumulative.resize(static_cast<Eigen::Index>(trace.steps.size()));
  double running = 0.0;
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const auto& g = trace.steps[t].gradient_sq_norm;
    if (!g) throw ContractError("trace has no gradient norms; the problem hides its gradient");
    running += *g;
    r.cumulative[static_cast<Eigen::Index>(t)] = running;
  }
  return r;
}

Eigen::VectorXd EstimatorVariance(const std::vector<std::vector<Eigen::VectorXd>>& estimates) {
  if (estimates.size() < 2) throw ConfigError("estimator variance needs at least two trials");
  const std::size_t steps = estimates.front().size();
  for (const auto& trial : estimates) {
    if (trial.size() != steps) throw DimensionError("trials have different lengths");
  }
  VarianceAccumulator acc(static_cast<std::int64_t>(steps));
  for (const auto& trial : estimates) {
    for (std::size_t t = 0; t < steps; ++t) acc.Add(static_cast<std::int64_t>(t), trial[t]);
  }
  return acc.Variance();
}

VarianceAccumulator::VarianceAccumulator(std::int64_t steps)
    : count_(static_cast<std::size_t>(steps), 0),
      mean_(static_cast<std::size_t>(steps)),
      m2_(static_cast<std::size_t>(steps), 0.0) {}

void VarianceAccumulator::Add(std::int64_t t, const Eigen::VectorXd& estimate) {
  if (t < 0 || t >= steps()) throw DimensionError("variance step index out of range");
  const auto i = static_cast<std::size_t>(t);
  if (count_[i] == 0) {
    mean_[i] = Eigen::VectorXd::Zero(estimate.size());
  } else if (mean_[i].size() != estimate.size()) {
    throw DimensionError("estimates at one step have different dimensions");
  }
  ++count_[i];
  const Eigen::VectorXd before = estimate - mean_[i];
  mean_[i] += before / static_cast<double>(count_[i]);
  m2_[i] += before.dot(estimate - mean_[i]);
}

Eigen::VectorXd VarianceAccumulator::Variance() const {
  Eigen::VectorXd v(steps());
  for (std::size_t i = 0; i < count_.size(); ++i) {
    if (count_[i] < 2) throw ConfigError("estimator variance needs at least two trials per step");
    v[static_cast<Eigen::Index>(i)] = m2_[i] / static_cast<double>(count_[i] - 1);
  }
  return v;
}

double LogLogSlope(const std::vector<double>& series, std::int64_t burn_in) {
  const auto n = static_cast<std::int64_t>(series.size());
  if (burn_in < 0) burn_in = n / 10;
  if (n - burn_in < 2) throw ConfigError("log-log fit needs at least two points after burn-in");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = static_cast<double>(n - burn_in);
  for (std::int64_t i = burn_in; i < n; ++i) {
    const double value = series[static_cast<std::size_t>(i)];
    if (!(value > 0.0)) {
      throw ConfigError("log-log fit needs positive values; entry " + std::to_string(i) + " is " +
                        std::to_string(value));
    }
    const double lx = std::log(static_cast<double>(i + 1));
    const double ly = std::log(value);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  return (m * sxy - sx * sy) / denom;
}

double LogLogSlope(const Eigen::VectorXd& series, std::int64_t burn_in) {
  return LogLogSlope(std::vector<double>(series.data(), series.data() + series.size()), burn_in);
}

StepStatistics AcrossTrials(const std::vector<std::vector<double>>& values) {
  const std::size_t n = CommonLength(values);
  StepStatistics s;
  s.mean.assign(n, 0.0);
  s.std.assign(n, 0.0);
  const double k = static_cast<double>(values.size());
  for (const auto& trial : values) {
    for (std::size_t t = 0; t < n; ++t) s.mean[t] += trial[t] / k;
  }
  if (values.size() < 2) return s;
  for (const auto& trial : values) {
    for (std::size_t t = 0; t < n; ++t) {
      const double dev = trial[t] - s.mean[t];
      s.std[t] += dev * dev;
    }
  }
  for (double& v : s.std) v = std::sqrt(v / (k - 1.0));
  return s;
}

}  // namespace zo
