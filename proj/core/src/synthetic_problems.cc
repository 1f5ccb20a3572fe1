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

#include "zo/synthetic_problems.h"

#include <cmath>
#include <utility>

#include "json_util.h"
#include "zo/errors.h"

namespace zo {

namespace {

using internal::Json;
using internal::VectorJson;

constexpr std::uint64_t kBaseKeySalt = 0x6a09e667f3bcc909ULL;

ProblemCapabilities SimulationCaps(ProblemCapabilities caps) {
  caps.supports_double_query = true;
  return caps;
}

std::optional<double> CombineIndependent(std::optional<double> a, double b) {
  if (!a) return std::nullopt;
  return std::sqrt(*a * *a + b * b);
}

void RequireBase(const std::unique_ptr<OnlineProblem>& base) {
  if (!base) throw ConfigError("wrapped problem must not be null");
}

}  // namespace

FunctionSequence::FunctionSequence(int dimension, TimedValue value, TimedGradient gradient,
                                   ProblemCapabilities extra)
    : OnlineProblem(dimension, SimulationCaps(extra), 0),
      value_(std::move(value)),
      gradient_(std::move(gradient)) {
  if (!value_) throw ConfigError("function sequence needs a value callable");
  auto& caps = mutable_capabilities();
  caps.exposes_true_cost = true;
  caps.exposes_gradient = static_cast<bool>(gradient_);
}

double FunctionSequence::Evaluate(const Eigen::VectorXd& x, std::uint64_t) {
  return value_(time(), x);
}

double FunctionSequence::ExpectedValue(const Eigen::VectorXd& x) const {
  return value_(time(), x);
}

Eigen::VectorXd FunctionSequence::GradientAt(const Eigen::VectorXd& x) const {
  return gradient_(time(), x);
}

std::string FunctionSequence::ParametersJson() const {
  Json j;
  j["kind"] = "function_sequence";
  j["dimension"] = dimension();
  return j.dump();
}

std::unique_ptr<OnlineProblem> MakeZeroProblem(int dimension) {
  ProblemCapabilities caps;
  caps.variation_vf = 0.0;
  return std::make_unique<FunctionSequence>(
      dimension, [](std::int64_t, const Eigen::VectorXd&) { return 0.0; },
      [dimension](std::int64_t, const Eigen::VectorXd&) {
        return Eigen::VectorXd::Zero(dimension).eval();
      },
      caps);
}

// ---------------------------------------------------------------------------

DriftingQuadratic::DriftingQuadratic(DriftingQuadraticOptions options)
    : OnlineProblem(options.dimension, {}, RandomStream::Derive(options.seed, 0).NextU64()),
      options_(std::move(options)),
      drift_stream_(RandomStream::Derive(options_.seed, 1)) {
  const int d = options_.dimension;
  if (options_.drift_rate < 0.0 || !std::isfinite(options_.drift_rate)) {
    throw ConfigError("drift_rate must be a finite non-negative number");
  }
  if (!(options_.region_radius > 0.0)) throw ConfigError("region_radius must be positive");
  if (options_.center_radius < 0.0) throw ConfigError("center_radius must be non-negative");
  if (options_.initial_center.size() == 0) options_.initial_center = Eigen::VectorXd::Zero(d);
  if (options_.initial_center.size() != d) {
    throw DimensionError("initial center has the wrong dimension");
  }
  center_ = options_.initial_center;
  auto& caps = mutable_capabilities();
  caps.supports_double_query = true;
  caps.exposes_true_cost = true;
  caps.exposes_gradient = true;
  caps.exposes_optimum = true;
  caps.lipschitz_l0 = 2.0 * options_.region_radius;
  caps.smooth_l1 = 1.0;
}

double DriftingQuadratic::Evaluate(const Eigen::VectorXd& x, std::uint64_t) {
  return 0.5 * (x - center_).squaredNorm();
}

double DriftingQuadratic::ExpectedValue(const Eigen::VectorXd& x) const {
  return 0.5 * (x - center_).squaredNorm();
}

Eigen::VectorXd DriftingQuadratic::GradientAt(const Eigen::VectorXd& x) const {
  return x - center_;
}

void DriftingQuadratic::AdvanceState() {
  history_.push_back(center_);
  if (options_.drift_rate == 0.0) return;
  const Direction zeta = SampleSphereDirection(drift_stream_, dimension());
  center_ += options_.drift_rate * zeta.components;
  if (options_.center_radius > 0.0) {
    const double n = center_.norm();
    if (n > options_.center_radius) center_ *= options_.center_radius / n;
  }
}

Eigen::VectorXd DriftingQuadratic::HindsightMinimizer(const FeasibleSet& set) const {
  // sum_s 1/2 |x - c_s|^2 = (n/2) |x - mean(c)|^2 + const, so the constrained
  // minimiser is the projected mean.
  if (history_.empty()) return set.Project(center_);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(dimension());
  for (const auto& c : history_) mean += c;
  mean /= static_cast<double>(history_.size());
  return set.Project(mean);
}

std::optional<double> DriftingQuadratic::VariationBound(double delta) const {
  // f_t(z) - f_{t-1}(z) = -(c_t - c_{t-1})^T (z - (c_t + c_{t-1}) / 2), and
  // |c_t - c_{t-1}| <= rho. With z = x + delta u, |x|, |c| <= region:
  // E|z - mid|^2 <= 4 region^2 + delta^2 d.
  const double r = options_.region_radius;
  return options_.drift_rate *
         std::sqrt(4.0 * r * r + delta * delta * static_cast<double>(dimension()));
}

std::string DriftingQuadratic::ParametersJson() const {
  Json j;
  j["kind"] = "drifting_quadratic";
  j["dimension"] = dimension();
  j["drift_rate"] = options_.drift_rate;
  j["initial_center"] = VectorJson(options_.initial_center);
  j["center_radius"] = options_.center_radius;
  j["region_radius"] = options_.region_radius;
  j["seed"] = options_.seed;
  return j.dump();
}

std::unique_ptr<DriftingQuadratic> MakeDriftingQuadratic(int d, double drift_rate,
                                                         Eigen::VectorXd initial_center,
                                                         std::uint64_t seed) {
  DriftingQuadraticOptions options;
  options.dimension = d;
  options.drift_rate = drift_rate;
  options.initial_center = std::move(initial_center);
  options.seed = seed;
  return std::make_unique<DriftingQuadratic>(std::move(options));
}

// ---------------------------------------------------------------------------

RandomWalkOffset::RandomWalkOffset(std::unique_ptr<OnlineProblem> base, double noise_std,
                                   double initial_offset, std::uint64_t seed)
    : OnlineProblem(base ? base->dimension() : 1, base ? base->capabilities() : ProblemCapabilities{},
                    RandomStream::Derive(seed, 0).NextU64()),
      base_(std::move(base)),
      noise_std_(noise_std),
      initial_offset_(initial_offset),
      offset_(initial_offset),
      walk_stream_(RandomStream::Derive(seed, 1)) {
  RequireBase(base_);
  if (noise_std < 0.0 || !std::isfinite(noise_std)) {
    throw ConfigError("noise_std must be a finite non-negative number");
  }
  if (!std::isfinite(initial_offset)) throw ConfigError("initial_offset must be finite");
  auto& caps = mutable_capabilities();
  caps.variation_vf = CombineIndependent(base_->capabilities().variation_vf, noise_std);
}

double RandomWalkOffset::Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) {
  return EvaluateOf(*base_, x, MixSeed(noise_key ^ kBaseKeySalt)) + offset_;
}

double RandomWalkOffset::ExpectedValue(const Eigen::VectorXd& x) const {
  return ExpectedValueOf(*base_, x) + offset_;
}

Eigen::VectorXd RandomWalkOffset::GradientAt(const Eigen::VectorXd& x) const {
  return GradientOf(*base_, x);
}

Eigen::VectorXd RandomWalkOffset::OptimumNow() const { return OptimumOf(*base_); }

void RandomWalkOffset::AdvanceState() {
  offsets_.push_back(offset_);
  if (noise_std_ > 0.0) offset_ += noise_std_ * walk_stream_.Normal();
  AdvanceOf(*base_);
}

std::optional<double> RandomWalkOffset::VariationBound(double delta) const {
  return CombineIndependent(base_->VariationBound(delta), noise_std_);
}

std::string RandomWalkOffset::ParametersJson() const {
  Json j;
  j["kind"] = "random_walk_offset";
  j["noise_std"] = noise_std_;
  j["initial_offset"] = initial_offset_;
  j["base"] = Json::parse(base_->ParametersJson());
  return j.dump();
}

std::unique_ptr<RandomWalkOffset> MakeRandomWalkOffset(std::unique_ptr<OnlineProblem> base,
                                                       double noise_std, double initial_offset,
                                                       std::uint64_t seed) {
  return std::make_unique<RandomWalkOffset>(std::move(base), noise_std, initial_offset, seed);
}

// ---------------------------------------------------------------------------

AdditiveNoise::AdditiveNoise(std::unique_ptr<OnlineProblem> base, double noise_std,
                             std::uint64_t seed)
    : OnlineProblem(base ? base->dimension() : 1, base ? base->capabilities() : ProblemCapabilities{},
                    RandomStream::Derive(seed, 2).NextU64()),
      base_(std::move(base)),
      noise_std_(noise_std) {
  RequireBase(base_);
  if (noise_std < 0.0 || !std::isfinite(noise_std)) {
    throw ConfigError("noise_std must be a finite non-negative number");
  }
}

double AdditiveNoise::Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) {
  // One noise sample per key: a QueryPair sees the same sample at both points.
  RandomStream sample(MixSeed(noise_key));
  const double noise = noise_std_ * sample.Normal();
  return EvaluateOf(*base_, x, MixSeed(noise_key ^ kBaseKeySalt)) + noise;
}

double AdditiveNoise::ExpectedValue(const Eigen::VectorXd& x) const {
  return ExpectedValueOf(*base_, x);
}

Eigen::VectorXd AdditiveNoise::GradientAt(const Eigen::VectorXd& x) const {
  return GradientOf(*base_, x);
}

Eigen::VectorXd AdditiveNoise::OptimumNow() const { return OptimumOf(*base_); }

void AdditiveNoise::AdvanceState() { AdvanceOf(*base_); }

std::optional<double> AdditiveNoise::VariationBound(double delta) const {
  return base_->VariationBound(delta);
}

std::string AdditiveNoise::ParametersJson() const {
  Json j;
  j["kind"] = "additive_noise";
  j["noise_std"] = noise_std_;
  j["base"] = Json::parse(base_->ParametersJson());
  return j.dump();
}

// ---------------------------------------------------------------------------

BoundedVariationAdversary::BoundedVariationAdversary(std::unique_ptr<OnlineProblem> base,
                                                     double vf, std::uint64_t seed)
    : OnlineProblem(base ? base->dimension() : 1, base ? base->capabilities() : ProblemCapabilities{},
                    RandomStream::Derive(seed, 3).NextU64()),
      base_(std::move(base)),
      vf_(vf) {
  RequireBase(base_);
  if (vf < 0.0 || !std::isfinite(vf)) throw ConfigError("V_f must be a finite non-negative number");
  auto& caps = mutable_capabilities();
  caps.replayable = false;
  if (base_->capabilities().variation_vf) {
    caps.variation_vf = *base_->capabilities().variation_vf + vf;
  }
}

double BoundedVariationAdversary::Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) {
  const double value = EvaluateOf(*base_, x, MixSeed(noise_key ^ kBaseKeySalt));
  if (!move_decided_) {
    if (last_observed_ && vf_ > 0.0) {
      const double up = std::abs(value + offset_ + vf_ - *last_observed_);
      const double down = std::abs(value + offset_ - vf_ - *last_observed_);
      offset_ += up >= down ? vf_ : -vf_;
    }
    move_decided_ = true;
    last_observed_ = value + offset_;
  }
  return value + offset_;
}

double BoundedVariationAdversary::ExpectedValue(const Eigen::VectorXd& x) const {
  return ExpectedValueOf(*base_, x) + offset_;
}

Eigen::VectorXd BoundedVariationAdversary::GradientAt(const Eigen::VectorXd& x) const {
  return GradientOf(*base_, x);
}

Eigen::VectorXd BoundedVariationAdversary::OptimumNow() const { return OptimumOf(*base_); }

void BoundedVariationAdversary::AdvanceState() {
  move_decided_ = false;
  AdvanceOf(*base_);
}

std::optional<double> BoundedVariationAdversary::VariationBound(double delta) const {
  const auto base = base_->VariationBound(delta);
  if (!base) return std::nullopt;
  return *base + vf_;
}

std::string BoundedVariationAdversary::ParametersJson() const {
  Json j;
  j["kind"] = "bounded_variation_adversary";
  j["vf"] = vf_;
  j["base"] = Json::parse(base_->ParametersJson());
  return j.dump();
}

std::unique_ptr<BoundedVariationAdversary> MakeBoundedVariationAdversary(
    std::unique_ptr<OnlineProblem> base, double vf, std::uint64_t seed) {
  return std::make_unique<BoundedVariationAdversary>(std::move(base), vf, seed);
}

}  // namespace zo
