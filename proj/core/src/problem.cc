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

#include "zo/problem.h"

#include <string>

#include "zo/errors.h"

namespace zo {

OnlineProblem::OnlineProblem(int dimension, ProblemCapabilities caps, std::uint64_t noise_seed)
    : dimension_(dimension), caps_(std::move(caps)), noise_stream_(noise_seed) {
  if (dimension < 1) throw DimensionError("problem dimension must be >= 1");
}

void OnlineProblem::BeginQuery(std::int64_t t, int count, const Eigen::VectorXd& x) {
  if (t != time_) {
    throw ContractError("query at t=" + std::to_string(t) + " but the problem is at t=" +
                        std::to_string(time_));
  }
  if (x.size() != dimension_) {
    throw DimensionError("query point has dimension " + std::to_string(x.size()) +
                         ", problem has " + std::to_string(dimension_));
  }
  const int budget = caps_.supports_double_query ? 2 : 1;
  if (queries_this_step_ + count > budget) {
    throw ContractError("only " + std::to_string(budget) + " objective quer" +
                        (budget == 1 ? "y is" : "ies are") + " allowed at t=" +
                        std::to_string(t));
  }
  queries_this_step_ += count;
  total_queries_ += count;
}

double OnlineProblem::Query(std::int64_t t, const Eigen::VectorXd& x) {
  BeginQuery(t, 1, x);
  return Evaluate(x, noise_stream_.NextU64());
}

std::pair<double, double> OnlineProblem::QueryPair(std::int64_t t, const Eigen::VectorXd& a,
                                                   const Eigen::VectorXd& b) {
  if (!caps_.supports_double_query) {
    throw ContractError("this problem does not allow two queries per step");
  }
  BeginQuery(t, 2, a);
  if (b.size() != dimension_) throw DimensionError("second query point has wrong dimension");
  const std::uint64_t key = noise_stream_.NextU64();
  const double first = Evaluate(a, key);
  const double second = Evaluate(b, key);
  return {first, second};
}

double OnlineProblem::TrueCost(const Eigen::VectorXd& x) const {
  if (!caps_.exposes_true_cost) throw ContractError("problem does not expose its true cost");
  if (x.size() != dimension_) throw DimensionError("true cost: wrong dimension");
  return ExpectedValue(x);
}

Eigen::VectorXd OnlineProblem::Gradient(const Eigen::VectorXd& x) const {
  if (!caps_.exposes_gradient) throw ContractError("problem does not expose gradients");
  if (x.size() != dimension_) throw DimensionError("gradient: wrong dimension");
  return GradientAt(x);
}

Eigen::VectorXd OnlineProblem::Optimum() const {
  if (!caps_.exposes_optimum) throw ContractError("problem does not expose its optimum");
  return OptimumNow();
}

std::optional<double> OnlineProblem::VariationBound(double) const { return caps_.variation_vf; }

void OnlineProblem::Advance() {
  AdvanceState();
  ++time_;
  queries_this_step_ = 0;
}

double OnlineProblem::ExpectedValue(const Eigen::VectorXd&) const {
  throw ContractError("problem does not expose its true cost");
}

Eigen::VectorXd OnlineProblem::GradientAt(const Eigen::VectorXd&) const {
  throw ContractError("problem does not expose gradients");
}

Eigen::VectorXd OnlineProblem::OptimumNow() const {
  throw ContractError("problem does not expose its optimum");
}

}  // namespace zo
