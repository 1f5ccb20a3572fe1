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

#ifndef ZO_PROBLEM_H_
#define ZO_PROBLEM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "zo/sampling.h"

namespace zo {

struct ProblemCapabilities {
  // Two queries at one time step with a shared noise draw. Only meaningful in
  // simulation, where the system can be reset between the two evaluations.
  bool supports_double_query = false;
  bool exposes_true_cost = false;
  bool exposes_gradient = false;
  bool exposes_optimum = false;
  // The objective sequence does not depend on what the learner queries, so a
  // fresh instance with the same seed reproduces it.
  bool replayable = true;
  std::optional<double> lipschitz_l0;
  std::optional<double> smooth_l1;
  std::optional<double> variation_vf;
};

// A time-varying objective f_t (or noisy F_t(.; xi_t)) observed through bandit
// feedback.
//
// The harness drives it as: Query(time(), x) once (or QueryPair once, when the
// problem supports it), then Advance(). Queries are counted; TrueCost,
// Gradient and Optimum are metrics-only and never counted.
//
// Each query draws a fresh 64-bit noise key from the problem's own stream and
// evaluates deterministically given (time, x, key).
class OnlineProblem {
 public:
  virtual ~OnlineProblem() = default;
  OnlineProblem(const OnlineProblem&) = delete;
  OnlineProblem& operator=(const OnlineProblem&) = delete;

  int dimension() const { return dimension_; }
  std::int64_t time() const { return time_; }
  const ProblemCapabilities& capabilities() const { return caps_; }

  // Allows or forbids two queries per step. Synthetic problems and the
  // simulators default to simulation mode (allowed).
  void set_simulation_mode(bool enabled) { caps_.supports_double_query = enabled; }

  // Throws ContractError when t != time() or when the step's query budget is
  // exhausted, DimensionError on a size mismatch.
  double Query(std::int64_t t, const Eigen::VectorXd& x);
  // Both points evaluated under the same noise draw. Counts two queries.
  std::pair<double, double> QueryPair(std::int64_t t, const Eigen::VectorXd& a,
                                      const Eigen::VectorXd& b);

  std::int64_t total_queries() const { return total_queries_; }
  int queries_this_step() const { return queries_this_step_; }

  // Noise-free f_t(x). Throws ContractError unless exposes_true_cost.
  double TrueCost(const Eigen::VectorXd& x) const;
  Eigen::VectorXd Gradient(const Eigen::VectorXd& x) const;
  Eigen::VectorXd Optimum() const;

  // Upper bound on sqrt(E[(f_t(x + delta u) - f_{t-1}(x + delta u))^2]) along a run
  // with exploration radius delta, when known.
  virtual std::optional<double> VariationBound(double delta) const;

  // Moves to t + 1 and evolves the hidden nonstationarity.
  void Advance();

  // Parameters for reproducibility dumps, as a JSON object.
  virtual std::string ParametersJson() const = 0;

 protected:
  OnlineProblem(int dimension, ProblemCapabilities caps, std::uint64_t noise_seed);

  virtual double Evaluate(const Eigen::VectorXd& x, std::uint64_t noise_key) = 0;
  virtual double ExpectedValue(const Eigen::VectorXd& x) const;
  virtual Eigen::VectorXd GradientAt(const Eigen::VectorXd& x) const;
  virtual Eigen::VectorXd OptimumNow() const;
  virtual void AdvanceState() = 0;

  // Wrappers forward to a wrapped instance through these.
  static double EvaluateOf(OnlineProblem& p, const Eigen::VectorXd& x, std::uint64_t key) {
    return p.Evaluate(x, key);
  }
  static double ExpectedValueOf(const OnlineProblem& p, const Eigen::VectorXd& x) {
    return p.ExpectedValue(x);
  }
  static Eigen::VectorXd GradientOf(const OnlineProblem& p, const Eigen::VectorXd& x) {
    return p.GradientAt(x);
  }
  static Eigen::VectorXd OptimumOf(const OnlineProblem& p) { return p.OptimumNow(); }
  static void AdvanceOf(OnlineProblem& p) { p.Advance(); }

  ProblemCapabilities& mutable_capabilities() { return caps_; }

 private:
  void BeginQuery(std::int64_t t, int count, const Eigen::VectorXd& x);

  int dimension_;
  ProblemCapabilities caps_;
  RandomStream noise_stream_;
  std::int64_t time_ = 0;
  int queries_this_step_ = 0;
  std::int64_t total_queries_ = 0;
};

}  // namespace zo

#endif  // ZO_PROBLEM_H_
