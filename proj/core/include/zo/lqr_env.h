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

// Linear-quadratic control with dynamics that drift between episodes.
//
// Episode t: x_{k+1} = A_t x_k + B_t u_k + w_k, u_k = K x_k, and the feedback
// is the discounted cost sum_{k<H} gamma^k (x_k^T Q x_k + u_k^T R u_k) of one
// rollout. Between episodes A_{t+1} = A_t + s M_t, B_{t+1} = B_t + s N_t with
// M_t, N_t entrywise uniform on [0, 1]. The decision variable is K flattened
// row-major (n_u x n_x).

#ifndef ZO_LQR_ENV_H_
#define ZO_LQR_ENV_H_

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "zo/problem.h"
#include "zo/sampling.h"

namespace zo {

struct LqrOptions {
  int state_dim = 6;
  int input_dim = 6;
  double gamma = 0.5;
  int horizon = 50;
  double init_std = 0.1;     // entries of A_0, B_0 ~ N(0, init_std^2)
  // A_{t+1} = A_t + drift_scale * M_t with M_t entries ~ U[drift_lo, drift_hi];
  // same for B.
  double drift_scale = 0.01;
  double drift_lo = 0.0;
  double drift_hi = 1.0;
  double noise_std = 0.01;   // process noise w_k ~ N(0, noise_std^2 I)
  // The rollout starts from a fixed x_0 drawn once from N(0, I), so two
  // queries in one episode differ only through the policy.
  double state_cost = 1.0;   // Q = state_cost * I
  double input_cost = 1.0;   // R = input_cost * I
  double blowup_norm = 1e9;  // states past this norm are scaled back and flagged
  std::uint64_t seed = 0;
};

LqrOptions LqrPaperPreset();
LqrOptions LqrDeskPreset();

class LqrEnv : public OnlineProblem {
 public:
  explicit LqrEnv(LqrOptions options);

  const LqrOptions& options() const { return options_; }
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::MatrixXd& b() const { return b_; }
  const Eigen::VectorXd& initial_state() const { return x0_; }
  // Number of rollouts whose state norm crossed blowup_norm.
  std::int64_t clipped_rollouts() const { return clipped_; }

  // Replace the dynamics (tests and diagnostics).
  void SetDynamics(Eigen::MatrixXd a, Eigen::MatrixXd b);
  void SetInitialState(Eigen::VectorXd x0);

  // K as an n_u x n_x matrix from the flattened decision vector.
  Eigen::MatrixXd GainFromVector(const Eigen::VectorXd& k) const;

  // One rollout with the process noise seeded by `noise_key`.
  double Rollout(const Eigen::VectorXd& k, std::uint64_t noise_key, bool* clipped = nullptr) const;

  std::string ParametersJson() const override;

 protected:
  double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) override;
  // Exact expected cost by propagating the state second moment
  // S_{k+1} = A_cl S_k A_cl^T + noise_std^2 I from S_0 = x_0 x_0^T.
  double ExpectedValue(const Eigen::VectorXd& x) const override;
  void AdvanceState() override;

 private:
  LqrOptions options_;
  Eigen::MatrixXd a_, b_;
  Eigen::VectorXd x0_;
  RandomStream drift_stream_;
  std::int64_t clipped_ = 0;
};

}  // namespace zo

#endif  // ZO_LQR_ENV_H_
