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

// Multi-agent resource sharing on a rectangular grid.
//
// Agent i holds stock m_i(k) and faces demand
//   d_i(k) = amp_i sin(omega_i k + phi_i) + w_{i,k}.
// Each step it splits its (non-negative part of the) stock over its slots: itself
// plus its 4-neighbours, with fractions a_ij = softmax_j(z_ij),
//   z_ij = sum_p theta_ij(p) |o_i - c_p|^2,  o_i = (m_i, d_i),
// c_p ranging over {-1, 0, 1}^2. Then
//   m_i(k+1) = m_i - sum_j a_ij m_i^+ + sum_j a_ji m_j^+ - d_i.
// The episode cost is sum_i sum_{k=0..H} gamma^k zeta_i m_i(k)^2 [m_i(k) < 0],
// and between episodes each zeta_i takes a step of sensitivity_drift * U[-1, 1].
//
// On a 4x4 grid there are 16 + 48 = 64 slots and 64 * 9 = 576 parameters.

#ifndef ZO_RESOURCE_GRID_ENV_H_
#define ZO_RESOURCE_GRID_ENV_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "zo/problem.h"
#include "zo/sampling.h"

namespace zo {

inline constexpr int kGridFeatureCount = 9;

struct ResourceGridOptions {
  int rows = 4;
  int cols = 4;
  double gamma = 0.75;
  int horizon = 30;
  double initial_stock = 0.0;  // m_i(0); empty stores make shortages the norm
  double initial_sensitivity = 1.0;
  double sensitivity_drift = 0.1;
  // Demand sinusoid parameters are drawn per agent, uniformly from these ranges.
  double amplitude_lo = 0.5, amplitude_hi = 1.5;
  double frequency_lo = 0.2, frequency_hi = 1.0;  // radians per step
  double phase_lo = 0.0, phase_hi = 6.283185307179586;
  double demand_noise_std = 0.1;
  // TrueCost averages this many episodes over fixed noise seeds.
  int eval_episodes = 32;
  std::uint64_t seed = 0;
};

ResourceGridOptions GridPaperPreset();
ResourceGridOptions GridDeskPreset();

struct GridEpisode {
  double cost = 0.0;
  std::vector<Eigen::VectorXd> stock;   // m(0) .. m(H)
  std::vector<Eigen::VectorXd> demand;  // d(0) .. d(H-1)
  // Largest |sum_j a_ij - 1| over agents and steps.
  double max_row_sum_error = 0.0;
  double min_allocation = 1.0;
  double max_allocation = 0.0;
};

class ResourceGridEnv : public OnlineProblem {
 public:
  explicit ResourceGridEnv(ResourceGridOptions options);

  const ResourceGridOptions& options() const { return options_; }
  int agents() const { return options_.rows * options_.cols; }
  int slot_count() const { return static_cast<int>(slot_target_.size()); }
  // Slots of agent i: [slot_begin(i), slot_begin(i + 1)); the first is i itself.
  int slot_begin(int agent) const { return slot_offset_[agent]; }
  int slot_target(int slot) const { return slot_target_[slot]; }

  const Eigen::VectorXd& sensitivity() const { return zeta_; }
  const Eigen::VectorXd& amplitude() const { return amplitude_; }
  const Eigen::VectorXd& frequency() const { return frequency_; }
  const Eigen::VectorXd& phase() const { return phase_; }

  // Fractions a_ij for every slot given the agents' observations.
  Eigen::VectorXd Allocations(const Eigen::VectorXd& theta, const Eigen::VectorXd& stock,
                              const Eigen::VectorXd& demand) const;

  // Full episode under the demand noise seeded by `noise_key`. With `record`,
  // per-step stocks, demands and allocation diagnostics are kept.
  GridEpisode Simulate(const Eigen::VectorXd& theta, std::uint64_t noise_key,
                       bool record = false) const;

  std::string ParametersJson() const override;

 protected:
  double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) override;
  double ExpectedValue(const Eigen::VectorXd& x) const override;
  void AdvanceState() override;

 private:
  ResourceGridOptions options_;
  std::vector<int> slot_offset_;  // agents() + 1 entries
  std::vector<int> slot_target_;
  Eigen::VectorXd amplitude_, frequency_, phase_;
  Eigen::VectorXd zeta_;
  std::vector<std::uint64_t> eval_keys_;
  RandomStream drift_stream_;
};

}  // namespace zo

#endif  // ZO_RESOURCE_GRID_ENV_H_
