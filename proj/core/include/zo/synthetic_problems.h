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

// Analytically tractable objective sequences.

#ifndef ZO_SYNTHETIC_PROBLEMS_H_
#define ZO_SYNTHETIC_PROBLEMS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "zo/feasible_set.h"
#include "zo/problem.h"
#include "zo/sampling.h"

namespace zo {

using TimedValue = std::function<double(std::int64_t, const Eigen::VectorXd&)>;
using TimedGradient = std::function<Eigen::VectorXd(std::int64_t, const Eigen::VectorXd&)>;

// Deterministic f_t given as a callable of (t, x).
class FunctionSequence : public OnlineProblem {
 public:
  FunctionSequence(int dimension, TimedValue value, TimedGradient gradient = nullptr,
                   ProblemCapabilities extra = {});

  std::string ParametersJson() const override;

 protected:
  double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) override;
  double ExpectedValue(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd GradientAt(const Eigen::VectorXd& x) const override;
  void AdvanceState() override {}

 private:
  TimedValue value_;
  TimedGradient gradient_;
};

// f_t(x) = 0 for all t.
std::unique_ptr<OnlineProblem> MakeZeroProblem(int dimension);

struct DriftingQuadraticOptions {
  int dimension = 5;
  double drift_rate = 0.0;
  // Initial center c_0. Empty means the origin.
  Eigen::VectorXd initial_center;
  // When positive, c_t is projected back onto the ball of this radius after
  // each drift step.
  double center_radius = 0.0;
  // Radius of the origin ball that contains both the iterates and the centers;
  // sets the reported Lipschitz constant L0 = 2 * region_radius.
  double region_radius = 1.0;
  std::uint64_t seed = 0;
};

// f_t(x) = 1/2 |x - c_t|^2 with c_{t+1} = c_t + drift_rate * zeta_t, zeta_t
// uniform on the unit sphere.
class DriftingQuadratic : public OnlineProblem {
 public:
  explicit DriftingQuadratic(DriftingQuadraticOptions options);

  const Eigen::VectorXd& center() const { return center_; }
  // c_0 .. c_{time()-1}, the centers of every completed step.
  const std::vector<Eigen::VectorXd>& center_history() const { return history_; }
  // argmin over `set` of sum_{s<time()} f_s(x): the projected centroid.
  Eigen::VectorXd HindsightMinimizer(const FeasibleSet& set) const;

  // rho * sqrt(4 region^2 + delta^2 d).
  std::optional<double> VariationBound(double delta) const override;
  std::string ParametersJson() const override;

 protected:
  double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) override;
  double ExpectedValue(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd GradientAt(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd OptimumNow() const override { return center_; }
  void AdvanceState() override;

 private:
  DriftingQuadraticOptions options_;
  Eigen::VectorXd center_;
  std::vector<Eigen::VectorXd> history_;
  RandomStream drift_stream_;
};

std::unique_ptr<DriftingQuadratic> MakeDriftingQuadratic(int d, double drift_rate,
                                                         Eigen::VectorXd initial_center,
                                                         std::uint64_t seed = 0);

// f_t(x) = base_t(x) + b_t with b_{t+1} = b_t + n_t, n_t ~ N(0, noise_std^2).
// Gradients are those of the base; |f_t| is unbounded over time while the
// per-step variation stays noise_std.
class RandomWalkOffset : public OnlineProblem {
 public:
  RandomWalkOffset(std::unique_ptr<OnlineProblem> base, double noise_std,
                   double initial_offset = 0.0, std::uint64_t seed = 0);

  double offset() const { return offset_; }
  const std::vector<double>& offset_history() const { return offsets_; }
  const OnlineProblem& base() const { return *base_; }

  std::optional<double> VariationBound(double delta) const override;
  std::string ParametersJson() const override;

 protected:
  double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) override;
  double ExpectedValue(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd GradientAt(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd OptimumNow() const override;
  void AdvanceState() override;

 private:
  std::unique_ptr<OnlineProblem> base_;
  double noise_std_;
  double initial_offset_;
  double offset_;
  std::vector<double> offsets_;
  RandomStream walk_stream_;
};

std::unique_ptr<RandomWalkOffset> MakeRandomWalkOffset(std::unique_ptr<OnlineProblem> base,
                                                       double noise_std,
                                                       double initial_offset = 0.0,
                                                       std::uint64_t seed = 0);

// Stochastic feedback F_t(x; xi) = f_t(x) + xi, xi ~ N(0, noise_std^2) drawn
// per query. TrueCost is f_t.
class AdditiveNoise : public OnlineProblem {
 public:
  AdditiveNoise(std::unique_ptr<OnlineProblem> base, double noise_std, std::uint64_t seed = 0);

  std::optional<double> VariationBound(double delta) const override;
  std::string ParametersJson() const override;

 protected:
  double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) override;
  double ExpectedValue(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd GradientAt(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd OptimumNow() const override;
  void AdvanceState() override;

 private:
  std::unique_ptr<OnlineProblem> base_;
  double noise_std_;
};

// Adversary with per-step budget V_f: f_t = base_t + b_t, where at time t,
// after seeing the query point x_t + delta u_t, it moves b_t = b_{t-1} + s_t
// with s_t in {-V_f, +V_f} chosen to maximise |f_t(x_t + delta u_t) - y_{t-1}|,
// the learner's next residual. For a stationary base, |f_t - f_{t-1}| <= V_f
// everywhere by construction. The sequence depends on the learner, so it is
// not replayable.
class BoundedVariationAdversary : public OnlineProblem {
 public:
  BoundedVariationAdversary(std::unique_ptr<OnlineProblem> base, double vf,
                            std::uint64_t seed = 0);

  double offset() const { return offset_; }

  std::optional<double> VariationBound(double delta) const override;
  std::string ParametersJson() const override;

 protected:
  double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) override;
  double ExpectedValue(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd GradientAt(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd OptimumNow() const override;
  void AdvanceState() override;

 private:
  std::unique_ptr<OnlineProblem> base_;
  double vf_;
  double offset_ = 0.0;        // b_{t-1} until this step's move is decided
  bool move_decided_ = false;  // s_t fixed for the current step
  std::optional<double> last_observed_;
};

std::unique_ptr<BoundedVariationAdversary> MakeBoundedVariationAdversary(
    std::unique_ptr<OnlineProblem> base, double vf, std::uint64_t seed = 0);

}  // namespace zo

#endif  // ZO_SYNTHETIC_PROBLEMS_H_
