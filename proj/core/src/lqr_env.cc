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

#include "zo/lqr_env.h"

#include <cmath>
#include <utility>

#include "json_util.h"
#include "zo/errors.h"

namespace zo {

namespace {

ProblemCapabilities LqrCaps() {
  ProblemCapabilities caps;
  caps.supports_double_query = true;
  caps.exposes_true_cost = true;
  return caps;
}

int CheckedDimension(const LqrOptions& o) {
  if (o.state_dim < 1 || o.input_dim < 1) throw DimensionError("LQR needs n_x, n_u >= 1");
  return o.state_dim * o.input_dim;
}

}  // namespace

LqrOptions LqrPaperPreset() { return LqrOptions{}; }

LqrOptions LqrDeskPreset() {
  LqrOptions o;
  o.state_dim = 3;
  o.input_dim = 3;
  o.horizon = 20;
  return o;
}

LqrEnv::LqrEnv(LqrOptions options)
    : OnlineProblem(CheckedDimension(options), LqrCaps(),
                    RandomStream::Derive(options.seed, 0).NextU64()),
      options_(options),
      drift_stream_(RandomStream::Derive(options.seed, 1)) {
  const auto& o = options_;
  if (o.horizon < 1) throw ConfigError("LQR horizon must be >= 1");
  if (!(o.gamma > 0.0 && o.gamma <= 1.0)) throw ConfigError("LQR gamma must lie in (0, 1]");
  if (o.state_cost < 0.0 || o.input_cost < 0.0) {
    throw ConfigError("LQR cost weights must be non-negative");
  }
  if (!(o.drift_lo <= o.drift_hi)) throw ConfigError("LQR drift range needs drift_lo <= drift_hi");
  if (o.noise_std < 0.0 || o.init_std < 0.0 || o.drift_scale < 0.0) {
    throw ConfigError("LQR noise, init and drift scales must be non-negative");
  }
  RandomStream init = RandomStream::Derive(o.seed, 2);
  a_.resize(o.state_dim, o.state_dim);
  b_.resize(o.state_dim, o.input_dim);
  for (Eigen::Index i = 0; i < a_.size(); ++i) a_.data()[i] = o.init_std * init.Normal();
  for (Eigen::Index i = 0; i < b_.size(); ++i) b_.data()[i] = o.init_std * init.Normal();
  x0_.resize(o.state_dim);
  for (Eigen::Index i = 0; i < x0_.size(); ++i) x0_[i] = init.Normal();
}

void LqrEnv::SetDynamics(Eigen::MatrixXd a, Eigen::MatrixXd b) {
  if (a.rows() != options_.state_dim || a.cols() != options_.state_dim ||
      b.rows() != options_.state_dim || b.cols() != options_.input_dim) {
    throw DimensionError("LQR dynamics have the wrong shape");
  }
  a_ = std::move(a);
  b_ = std::move(b);
}

void LqrEnv::SetInitialState(Eigen::VectorXd x0) {
  if (x0.size() != options_.state_dim) throw DimensionError("LQR x0 has the wrong dimension");
  x0_ = std::move(x0);
}

Eigen::MatrixXd LqrEnv::GainFromVector(const Eigen::VectorXd& k) const {
  if (k.size() != dimension()) throw DimensionError("gain vector has the wrong dimension");
  Eigen::MatrixXd gain(options_.input_dim, options_.state_dim);
  for (int i = 0; i < options_.input_dim; ++i) {
    for (int j = 0; j < options_.state_dim; ++j) gain(i, j) = k[i * options_.state_dim + j];
  }
  return gain;
}

double LqrEnv::Rollout(const Eigen::VectorXd& k, std::uint64_t noise_key, bool* clipped) const {
  const Eigen::MatrixXd gain = GainFromVector(k);
  RandomStream noise(MixSeed(noise_key));
  Eigen::VectorXd x = x0_;
  Eigen::VectorXd w(options_.state_dim);
  double cost = 0.0;
  double discount = 1.0;
  bool hit = false;
  for (int step = 0; step < options_.horizon; ++step) {
    const Eigen::VectorXd u = gain * x;
    cost += discount *
            (options_.state_cost * x.squaredNorm() + options_.input_cost * u.squaredNorm());
    discount *= options_.gamma;
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = options_.noise_std * noise.Normal();
    x = a_ * x + b_ * u + w;
    const double n = x.norm();
    if (n > options_.blowup_norm) {
      x *= options_.blowup_norm / n;
      hit = true;
    }
  }
  if (clipped) *clipped = hit;
  return cost;
}

double LqrEnv::Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) {
  bool hit = false;
  const double cost = Rollout(x, noise_key, &hit);
  if (hit) ++clipped_;
  return cost;
}

double LqrEnv::ExpectedValue(const Eigen::VectorXd& x) const {
  const Eigen::MatrixXd gain = GainFromVector(x);
  const Eigen::MatrixXd closed = a_ + b_ * gain;
  const Eigen::MatrixXd weight =
      options_.state_cost * Eigen::MatrixXd::Identity(options_.state_dim, options_.state_dim) +
      options_.input_cost * gain.transpose() * gain;
  const double noise_var = options_.noise_std * options_.noise_std;
  const double cap = options_.blowup_norm * options_.blowup_norm;
  Eigen::MatrixXd moment = x0_ * x0_.transpose();
  double cost = 0.0;
  double discount = 1.0;
  for (int step = 0; step < options_.horizon; ++step) {
    cost += discount * (weight.cwiseProduct(moment)).sum();
    discount *= options_.gamma;
    moment = closed * moment * closed.transpose();
    moment.diagonal().array() += noise_var;
    const double tr = moment.trace();
    if (tr > cap) moment *= cap / tr;
  }
  return cost;
}

void LqrEnv::AdvanceState() {
  const double s = options_.drift_scale;
  const auto step = [&] { return s * drift_stream_.Uniform(options_.drift_lo, options_.drift_hi); };
  for (Eigen::Index i = 0; i < a_.size(); ++i) a_.data()[i] += step();
  for (Eigen::Index i = 0; i < b_.size(); ++i) b_.data()[i] += step();
}

std::string LqrEnv::ParametersJson() const {
  internal::Json j;
  j["kind"] = "lqr";
  j["state_dim"] = options_.state_dim;
  j["input_dim"] = options_.input_dim;
  j["gamma"] = options_.gamma;
  j["horizon"] = options_.horizon;
  j["init_std"] = options_.init_std;
  j["drift_scale"] = options_.drift_scale;
  j["drift_range"] = {options_.drift_lo, options_.drift_hi};
  j["noise_std"] = options_.noise_std;
  j["state_cost"] = options_.state_cost;
  j["input_cost"] = options_.input_cost;
  j["blowup_norm"] = options_.blowup_norm;
  j["seed"] = options_.seed;
  j["x0"] = internal::VectorJson(x0_);
  j["a_t"] = internal::MatrixJson(a_);
  j["b_t"] = internal::MatrixJson(b_);
  return j.dump();
}

}  // namespace zo
