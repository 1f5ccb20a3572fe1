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

#include "zo/resource_grid_env.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json_util.h"
#include "zo/errors.h"

namespace zo {

namespace {

ProblemCapabilities GridCaps() {
  ProblemCapabilities caps;
  caps.supports_double_query = true;
  caps.exposes_true_cost = true;
  return caps;
}

int Slots(int rows, int cols) {
  // Each agent keeps one slot for itself and one per in-grid 4-neighbour.
  return rows * cols + 2 * (rows * (cols - 1) + cols * (rows - 1));
}

int CheckedDimension(const ResourceGridOptions& o) {
  if (o.rows < 1 || o.cols < 1) throw DimensionError("grid needs at least one row and column");
  return Slots(o.rows, o.cols) * kGridFeatureCount;
}

double Feature(int p, double m, double d) {
  const double cm = static_cast<double>(p / 3 - 1);
  const double cd = static_cast<double>(p % 3 - 1);
  return (m - cm) * (m - cm) + (d - cd) * (d - cd);
}

double DrawIn(RandomStream& rng, double lo, double hi) {
  return lo == hi ? lo : rng.Uniform(lo, hi);
}

}  // namespace

ResourceGridOptions GridPaperPreset() { return ResourceGridOptions{}; }

ResourceGridOptions GridDeskPreset() {
  ResourceGridOptions o;
  o.rows = 2;
  o.cols = 2;
  o.horizon = 10;
  return o;
}

ResourceGridEnv::ResourceGridEnv(ResourceGridOptions options)
    : OnlineProblem(CheckedDimension(options), GridCaps(),
                    RandomStream::Derive(options.seed, 0).NextU64()),
      options_(options),
      drift_stream_(RandomStream::Derive(options.seed, 1)) {
  const auto& o = options_;
  if (o.horizon < 1) throw ConfigError("grid horizon must be >= 1");
  if (!(o.gamma > 0.0 && o.gamma <= 1.0)) throw ConfigError("grid gamma must lie in (0, 1]");
  if (o.amplitude_lo > o.amplitude_hi || o.frequency_lo > o.frequency_hi ||
      o.phase_lo > o.phase_hi) {
    throw ConfigError("grid demand ranges must have lo <= hi");
  }
  if (o.demand_noise_std < 0.0 || o.sensitivity_drift < 0.0) {
    throw ConfigError("grid noise and drift scales must be non-negative");
  }
  if (o.eval_episodes < 1) throw ConfigError("grid eval_episodes must be >= 1");

  const int n = agents();
  slot_offset_.reserve(n + 1);
  for (int i = 0; i < n; ++i) {
    slot_offset_.push_back(static_cast<int>(slot_target_.size()));
    const int r = i / o.cols, c = i % o.cols;
    slot_target_.push_back(i);
    if (r > 0) slot_target_.push_back(i - o.cols);
    if (c > 0) slot_target_.push_back(i - 1);
    if (c + 1 < o.cols) slot_target_.push_back(i + 1);
    if (r + 1 < o.rows) slot_target_.push_back(i + o.cols);
  }
  slot_offset_.push_back(static_cast<int>(slot_target_.size()));

  RandomStream init = RandomStream::Derive(o.seed, 2);
  amplitude_.resize(n);
  frequency_.resize(n);
  phase_.resize(n);
  for (int i = 0; i < n; ++i) {
    amplitude_[i] = DrawIn(init, o.amplitude_lo, o.amplitude_hi);
    frequency_[i] = DrawIn(init, o.frequency_lo, o.frequency_hi);
    phase_[i] = DrawIn(init, o.phase_lo, o.phase_hi);
  }
  zeta_ = Eigen::VectorXd::Constant(n, o.initial_sensitivity);
  RandomStream keys = RandomStream::Derive(o.seed, 3);
  for (int e = 0; e < o.eval_episodes; ++e) eval_keys_.push_back(keys.NextU64());
}

Eigen::VectorXd ResourceGridEnv::Allocations(const Eigen::VectorXd& theta,
                                             const Eigen::VectorXd& stock,
                                             const Eigen::VectorXd& demand) const {
  if (theta.size() != dimension()) throw DimensionError("grid policy has the wrong dimension");
  Eigen::VectorXd a(slot_count());
  double features[kGridFeatureCount];
  for (int i = 0; i < agents(); ++i) {
    for (int p = 0; p < kGridFeatureCount; ++p) features[p] = Feature(p, stock[i], demand[i]);
    const int begin = slot_offset_[i], end = slot_offset_[i + 1];
    double zmax = -std::numeric_limits<double>::infinity();
    for (int s = begin; s < end; ++s) {
      double z = 0.0;
      for (int p = 0; p < kGridFeatureCount; ++p) z += theta[s * kGridFeatureCount + p] * features[p];
      a[s] = z;
      zmax = std::max(zmax, z);
    }
    double total = 0.0;
    for (int s = begin; s < end; ++s) {
      a[s] = std::exp(a[s] - zmax);
      total += a[s];
    }
    for (int s = begin; s < end; ++s) a[s] /= total;
  }
  return a;
}

GridEpisode ResourceGridEnv::Simulate(const Eigen::VectorXd& theta, std::uint64_t noise_key,
                                      bool record) const {
  const int n = agents();
  const auto& o = options_;
  RandomStream noise(MixSeed(noise_key));
  GridEpisode episode;
  Eigen::VectorXd m = Eigen::VectorXd::Constant(n, o.initial_stock);
  Eigen::VectorXd d(n), next(n);
  double discount = 1.0;
  auto stage_cost = [&](const Eigen::VectorXd& stock) {
    double c = 0.0;
    for (int i = 0; i < n; ++i) {
      if (stock[i] < 0.0) c += zeta_[i] * stock[i] * stock[i];
    }
    return c;
  };
  if (record) episode.stock.push_back(m);
  for (int k = 0; k < o.horizon; ++k) {
    episode.cost += discount * stage_cost(m);
    discount *= o.gamma;
    for (int i = 0; i < n; ++i) {
      d[i] = amplitude_[i] * std::sin(frequency_[i] * k + phase_[i]) +
             o.demand_noise_std * noise.Normal();
    }
    const Eigen::VectorXd a = Allocations(theta, m, d);
    next = m - d;
    for (int i = 0; i < n; ++i) {
      const double shipped = std::max(m[i], 0.0);
      if (shipped == 0.0) continue;
      // The first slot keeps stock at home. Computing the outflow as one
      // product bounded by `shipped` keeps m >= 0 exact when demand is zero.
      double away = 0.0;
      for (int s = slot_offset_[i] + 1; s < slot_offset_[i + 1]; ++s) {
        away += a[s];
        next[slot_target_[s]] += a[s] * shipped;
      }
      next[i] -= std::min(away, 1.0) * shipped;
    }
    if (record) {
      for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int s = slot_offset_[i]; s < slot_offset_[i + 1]; ++s) {
          row += a[s];
          episode.min_allocation = std::min(episode.min_allocation, a[s]);
          episode.max_allocation = std::max(episode.max_allocation, a[s]);
        }
        episode.max_row_sum_error = std::max(episode.max_row_sum_error, std::abs(row - 1.0));
      }
      episode.demand.push_back(d);
    }
    m = next;
    if (record) episode.stock.push_back(m);
  }
  episode.cost += discount * stage_cost(m);
  return episode;
}

double ResourceGridEnv::Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) {
  return Simulate(x, noise_key).cost;
}

double ResourceGridEnv::ExpectedValue(const Eigen::VectorXd& x) const {
  double total = 0.0;
  for (std::uint64_t key : eval_keys_) total += Simulate(x, key).cost;
  return total / static_cast<double>(eval_keys_.size());
}

void ResourceGridEnv::AdvanceState() {
  // zeta is reflected at zero so the sensitivity stays a penalty.
  for (Eigen::Index i = 0; i < zeta_.size(); ++i) {
    zeta_[i] = std::abs(zeta_[i] + options_.sensitivity_drift * drift_stream_.Uniform(-1.0, 1.0));
  }
}

std::string ResourceGridEnv::ParametersJson() const {
  const auto& o = options_;
  internal::Json j;
  j["kind"] = "resource_grid";
  j["rows"] = o.rows;
  j["cols"] = o.cols;
  j["gamma"] = o.gamma;
  j["horizon"] = o.horizon;
  j["initial_stock"] = o.initial_stock;
  j["initial_sensitivity"] = o.initial_sensitivity;
  j["sensitivity_drift"] = o.sensitivity_drift;
  j["amplitude_range"] = {o.amplitude_lo, o.amplitude_hi};
  j["frequency_range"] = {o.frequency_lo, o.frequency_hi};
  j["phase_range"] = {o.phase_lo, o.phase_hi};
  j["demand_noise_std"] = o.demand_noise_std;
  j["eval_episodes"] = o.eval_episodes;
  j["seed"] = o.seed;
  j["amplitude"] = internal::VectorJson(amplitude_);
  j["frequency"] = internal::VectorJson(frequency_);
  j["phase"] = internal::VectorJson(phase_);
  j["sensitivity"] = internal::VectorJson(zeta_);
  return j.dump();
}

}  // namespace zo
