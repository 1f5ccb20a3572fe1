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

#include "zo/feasible_set.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zo/errors.h"

namespace zo {

namespace {

constexpr double kOriginTolerance = 1e-12;

}  // namespace

FeasibleSet FeasibleSet::Unconstrained(int d) {
  if (d < 1) throw DimensionError("set dimension must be >= 1");
  FeasibleSet set;
  set.kind_ = Kind::kUnconstrained;
  set.dimension_ = d;
  return set;
}

FeasibleSet FeasibleSet::Box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
  if (lo.size() < 1 || lo.size() != hi.size()) {
    throw DimensionError("box bounds must be non-empty and of equal length");
  }
  if ((lo.array() > hi.array()).any()) throw ConfigError("box requires lo <= hi componentwise");
  if (!lo.allFinite() || !hi.allFinite()) throw ConfigError("box bounds must be finite");
  FeasibleSet set;
  set.kind_ = Kind::kBox;
  set.dimension_ = static_cast<int>(lo.size());
  set.lo_ = std::move(lo);
  set.hi_ = std::move(hi);
  set.DeriveRadii();
  return set;
}

FeasibleSet FeasibleSet::Ball(Eigen::VectorXd center, double radius) {
  if (center.size() < 1) throw DimensionError("ball center must be non-empty");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ConfigError("ball radius must be > 0");
  FeasibleSet set;
  set.kind_ = Kind::kBall;
  set.dimension_ = static_cast<int>(center.size());
  set.center_ = std::move(center);
  set.radius_ = radius;
  set.DeriveRadii();
  return set;
}

void FeasibleSet::DeriveRadii() {
  inner_.reset();
  outer_.reset();
  if (kind_ == Kind::kBall) {
    const double offset = center_.norm();
    if (offset < radius_) inner_ = radius_ - offset;
    outer_ = radius_ + offset;
  } else if (kind_ == Kind::kBox) {
    const double inner = std::min((-lo_).minCoeff(), hi_.minCoeff());
    if (inner > 0.0) inner_ = inner;
    outer_ = lo_.cwiseAbs().cwiseMax(hi_.cwiseAbs()).norm();
  }
}

FeasibleSet FeasibleSet::WithRadii(double inner, double outer) const {
  if (kind_ == Kind::kUnconstrained) throw ConfigError("unconstrained set has no finite radii");
  if (!(inner > 0.0) || !(outer >= inner)) {
    throw ConfigError("radii must satisfy 0 < r <= rbar");
  }
  // The derived radii are the tightest ones; overrides may only loosen them.
  if (!inner_ || inner > *inner_ + kMembershipTolerance) {
    throw ConfigError("inner radius r is too large: r B is not contained in the set");
  }
  if (outer + kMembershipTolerance < *outer_) {
    throw ConfigError("outer radius rbar is too small: the set is not contained in rbar B");
  }
  FeasibleSet copy = *this;
  copy.inner_ = inner;
  copy.outer_ = outer;
  return copy;
}

Eigen::VectorXd FeasibleSet::Project(const Eigen::VectorXd& x) const {
  if (x.size() != dimension_) {
    throw DimensionError("projection: point has dimension " + std::to_string(x.size()) +
                         ", set has " + std::to_string(dimension_));
  }
  switch (kind_) {
    case Kind::kUnconstrained:
      return x;
    case Kind::kBox:
      return x.cwiseMax(lo_).cwiseMin(hi_);
    case Kind::kBall: {
      const Eigen::VectorXd offset = x - center_;
      const double norm = offset.norm();
      if (norm <= radius_) return x;
      return center_ + (radius_ / norm) * offset;
    }
  }
  return x;
}

bool FeasibleSet::Contains(const Eigen::VectorXd& x, double tol) const {
  if (x.size() != dimension_) return false;
  switch (kind_) {
    case Kind::kUnconstrained:
      return x.allFinite();
    case Kind::kBox:
      return ((x - lo_).array() >= -tol).all() && ((hi_ - x).array() >= -tol).all();
    case Kind::kBall:
      return (x - center_).norm() <= radius_ + tol;
  }
  return false;
}

FeasibleSet FeasibleSet::Shrink(double xi) const {
  if (!(xi >= 0.0 && xi <= 1.0)) throw ConfigError("shrink factor xi must lie in [0, 1]");
  const double scale = 1.0 - xi;
  FeasibleSet out = *this;
  switch (kind_) {
    case Kind::kUnconstrained:
      if (xi == 1.0) throw ConfigError("cannot shrink an unconstrained set to a point");
      return out;
    case Kind::kBox:
      if ((lo_.array() > 0.0).any() || (hi_.array() < 0.0).any()) {
        throw ConfigError("shrink requires a box that contains the origin");
      }
      out.lo_ = scale * lo_;
      out.hi_ = scale * hi_;
      break;
    case Kind::kBall:
      if (center_.norm() > kOriginTolerance) {
        throw ConfigError("shrink requires a ball centred at the origin");
      }
      out.radius_ = scale * radius_;
      break;
  }
  if (inner_) out.inner_ = scale * *inner_;
  if (outer_) out.outer_ = scale * *outer_;
  return out;
}

std::string FeasibleSet::Describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kUnconstrained:
      os << "unconstrained(d=" << dimension_ << ")";
      break;
    case Kind::kBox:
      os << "box(d=" << dimension_ << ")";
      break;
    case Kind::kBall:
      os << "ball(d=" << dimension_ << ", radius=" << radius_ << ")";
      break;
  }
  return os.str();
}

bool FeasibilityMargin(const FeasibleSet& set, double xi, double delta) {
  if (!set.inner_radius()) throw ConfigError("feasibility margin needs an inner radius r");
  return xi <= 1.0 && xi >= delta / *set.inner_radius();
}

}  // namespace zo
