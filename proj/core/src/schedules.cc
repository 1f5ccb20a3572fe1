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

#include "zo/schedules.h"

#include <cmath>
#include <sstream>

#include "zo/errors.h"

namespace zo {

namespace {

const double kTwoSqrt2 = 2.0 * std::sqrt(2.0);

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string("schedule parameter ") + name + " must be positive");
  }
}

void RequireCommon(double l0, int d, std::int64_t horizon) {
  RequirePositive(l0, "L0");
  if (d < 1) throw ConfigError("schedule parameter d must be >= 1");
  if (horizon < 1) throw ConfigError("schedule parameter T must be >= 1");
}

// `strict`: the prescription needs T > min_horizon rather than T >= min_horizon.
void CheckHorizon(Schedule& s, bool strict) {
  const double t = static_cast<double>(s.horizon);
  const bool ok = strict ? t > s.min_horizon : t >= s.min_horizon;
  if (!ok) {
    std::ostringstream os;
    os << ScheduleTagName(s.tag) << ": horizon T=" << s.horizon << " is below the validity "
       << "threshold " << s.min_horizon;
    s.warnings.push_back(os.str());
  }
  // Several prescriptions land exactly on 1/2 at the threshold; allow rounding.
  if (s.alpha > 0.5 * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << ScheduleTagName(s.tag) << ": contraction rate alpha=" << s.alpha << " exceeds 1/2";
    s.warnings.push_back(os.str());
  }
}

}  // namespace

std::string_view ScheduleTagName(ScheduleTag tag) {
  switch (tag) {
    case ScheduleTag::kConvexLipschitz:
      return "convex_lipschitz";
    case ScheduleTag::kConvexSmooth:
      return "convex_smooth";
    case ScheduleTag::kNonconvexLipschitz:
      return "nonconvex_lipschitz";
    case ScheduleTag::kNonconvexSmooth:
      return "nonconvex_smooth";
    case ScheduleTag::kSphereConvex:
      return "sphere_convex";
    case ScheduleTag::kExplicit:
      return "explicit";
  }
  return "unknown";
}

ScheduleTag ParseScheduleTag(std::string_view name) {
  for (ScheduleTag tag : {ScheduleTag::kConvexLipschitz, ScheduleTag::kConvexSmooth,
                          ScheduleTag::kNonconvexLipschitz, ScheduleTag::kNonconvexSmooth,
                          ScheduleTag::kSphereConvex, ScheduleTag::kExplicit}) {
    if (ScheduleTagName(tag) == name) return tag;
  }
  throw ConfigError("unknown schedule theorem '" + std::string(name) + "'");
}

double ContractionRate(double l0, double eta, double delta, int d, DirectionKernel kernel) {
  RequirePositive(delta, "delta");
  const double dd = static_cast<double>(d);
  const double dim_factor = kernel == DirectionKernel::kSphere ? dd * dd : dd;
  return 4.0 * dim_factor * l0 * l0 * eta * eta / (delta * delta);
}

Schedule ConvexLipschitzSchedule(double l0, double radius, int d, std::int64_t horizon, double q,
                                 bool radius_known) {
  RequireCommon(l0, d, horizon);
  if (radius_known) RequirePositive(radius, "R");
  const double r = radius_known ? radius : 1.0;
  const double t = static_cast<double>(horizon);
  Schedule s;
  s.tag = ScheduleTag::kConvexLipschitz;
  s.horizon = horizon;
  s.eta = std::pow(r, 1.5) / (kTwoSqrt2 * l0 * std::sqrt(static_cast<double>(d)) * std::pow(t, 0.75));
  s.delta = std::sqrt(r) * std::pow(l0, -q) * std::pow(t, -0.25);
  s.min_horizon = std::pow(l0, 2.0 * q) * r * r;
  s.alpha = ContractionRate(l0, s.eta, s.delta, d, DirectionKernel::kGaussian);
  CheckHorizon(s, /*strict=*/true);
  return s;
}

Schedule ConvexSmoothSchedule(double l0, double radius, int d, std::int64_t horizon,
                              bool radius_known) {
  RequireCommon(l0, d, horizon);
  if (radius_known) RequirePositive(radius, "R");
  const double r = radius_known ? radius : 1.0;
  const double t = static_cast<double>(horizon);
  const double dd = static_cast<double>(d);
  Schedule s;
  s.tag = ScheduleTag::kConvexSmooth;
  s.horizon = horizon;
  s.eta = std::pow(r, 4.0 / 3.0) / (kTwoSqrt2 * l0 * std::pow(dd, 2.0 / 3.0) * std::pow(t, 2.0 / 3.0));
  s.delta = std::cbrt(r) * std::pow(dd, -1.0 / 6.0) * std::pow(t, -1.0 / 6.0);
  s.min_horizon = r * r;
  s.alpha = ContractionRate(l0, s.eta, s.delta, d, DirectionKernel::kGaussian);
  CheckHorizon(s, /*strict=*/true);
  return s;
}

Schedule NonconvexLipschitzSchedule(double l0, double eps_f, int d, std::int64_t horizon) {
  RequireCommon(l0, d, horizon);
  RequirePositive(eps_f, "eps_f");
  const double t = static_cast<double>(horizon);
  const double dd = static_cast<double>(d);
  Schedule s;
  s.tag = ScheduleTag::kNonconvexLipschitz;
  s.horizon = horizon;
  s.eta = std::pow(eps_f, 1.5) / (kTwoSqrt2 * l0 * l0 * std::pow(dd, 1.5) * std::sqrt(t));
  s.delta = eps_f / (std::sqrt(dd) * l0);
  s.min_horizon = 1.0 / (dd * eps_f);
  s.alpha = ContractionRate(l0, s.eta, s.delta, d, DirectionKernel::kGaussian);
  CheckHorizon(s, /*strict=*/true);
  return s;
}

Schedule NonconvexSmoothSchedule(double l0, int d, std::int64_t horizon) {
  RequireCommon(l0, d, horizon);
  const double t = static_cast<double>(horizon);
  const double dd = static_cast<double>(d);
  Schedule s;
  s.tag = ScheduleTag::kNonconvexSmooth;
  s.horizon = horizon;
  s.eta = 1.0 / (kTwoSqrt2 * l0 * std::pow(dd, 4.0 / 3.0) * std::sqrt(t));
  s.delta = 1.0 / (std::pow(dd, 5.0 / 6.0) * std::pow(t, 0.25));
  s.min_horizon = 1.0;
  s.alpha = ContractionRate(l0, s.eta, s.delta, d, DirectionKernel::kGaussian);
  CheckHorizon(s, /*strict=*/false);
  return s;
}

Schedule SphereConvexSchedule(double l0, double outer_radius, double inner_radius, int d,
                              std::int64_t horizon, double q) {
  RequireCommon(l0, d, horizon);
  RequirePositive(outer_radius, "rbar");
  RequirePositive(inner_radius, "r");
  if (inner_radius > outer_radius) throw ConfigError("sphere schedule requires r <= rbar");
  const double t = static_cast<double>(horizon);
  const double dd = static_cast<double>(d);
  Schedule s;
  s.tag = ScheduleTag::kSphereConvex;
  s.horizon = horizon;
  s.eta = std::pow(outer_radius, 1.5) / (kTwoSqrt2 * l0 * std::sqrt(dd) * std::pow(t, 0.75));
  s.delta = std::sqrt(outer_radius * dd) * std::pow(l0, -q) * std::pow(t, -0.25);
  const double xi = s.delta / inner_radius;
  if (xi > 1.0) {
    std::ostringstream os;
    os << "sphere schedule: xi = delta / r = " << xi << " > 1, no feasible shrink";
    throw ConfigError(os.str());
  }
  s.xi = xi;
  s.min_horizon = outer_radius * outer_radius * std::pow(l0, 2.0 * q);
  s.alpha = ContractionRate(l0, s.eta, s.delta, d, DirectionKernel::kSphere);
  CheckHorizon(s, /*strict=*/true);
  return s;
}

}  // namespace zo
