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

#ifndef ZO_FEASIBLE_SET_H_
#define ZO_FEASIBLE_SET_H_

#include <optional>
#include <string>

#include <Eigen/Core>

namespace zo {

// Membership tolerance used throughout.
inline constexpr double kMembershipTolerance = 1e-9;

// Convex constraint set X with Euclidean projection. Immutable value type.
//
// Inner/outer radii r, rbar describe r B ⊆ X ⊆ rbar B around the origin. They
// are derived automatically for balls and boxes that contain the origin, and
// may be overridden with WithRadii() as long as the containment still holds.
class FeasibleSet {
 public:
  enum class Kind { kUnconstrained, kBox, kBall };

  static FeasibleSet Unconstrained(int d);
  // Requires lo <= hi componentwise.
  static FeasibleSet Box(Eigen::VectorXd lo, Eigen::VectorXd hi);
  // Requires radius > 0.
  static FeasibleSet Ball(Eigen::VectorXd center, double radius);

  FeasibleSet WithRadii(double inner, double outer) const;

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  const Eigen::VectorXd& lo() const { return lo_; }
  const Eigen::VectorXd& hi() const { return hi_; }
  const Eigen::VectorXd& center() const { return center_; }
  double radius() const { return radius_; }
  std::optional<double> inner_radius() const { return inner_; }
  std::optional<double> outer_radius() const { return outer_; }

  // Euclidean projection; identity on members. Throws DimensionError.
  Eigen::VectorXd Project(const Eigen::VectorXd& x) const;
  bool Contains(const Eigen::VectorXd& x, double tol = kMembershipTolerance) const;

  // (1 - xi) X. Balls must be centred at the origin and boxes must contain
  // it. Throws ConfigError for xi outside [0, 1] or an unsupported set.
  FeasibleSet Shrink(double xi) const;

  std::string Describe() const;

 private:
  FeasibleSet() = default;
  void DeriveRadii();

  Kind kind_ = Kind::kUnconstrained;
  int dimension_ = 0;
  Eigen::VectorXd lo_, hi_;
  Eigen::VectorXd center_;
  double radius_ = 0.0;
  std::optional<double> inner_, outer_;
};

// True iff 1 >= xi >= delta / r, i.e. every x in (1 - xi) X has x + delta u in X
// for all unit u. Throws ConfigError when the set has no inner radius.
bool FeasibilityMargin(const FeasibleSet& set, double xi, double delta);

}  // namespace zo

#endif  // ZO_FEASIBLE_SET_H_
