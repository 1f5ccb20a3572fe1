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

// Closed-form step size / exploration radius prescriptions for residual
// feedback, one per problem class, together with the contraction rate
//
//   alpha = 4 d L0^2 eta^2 / delta^2        (Gaussian directions)
//   alpha = 4 d^2 L0^2 eta^2 / delta^2      (unit-sphere directions)
//
// of the second-moment recursion E|g_t|^2 <= alpha E|g_{t-1}|^2 + D_t.
// Constants are kept exactly as derived; nothing is re-tuned here.

#ifndef ZO_SCHEDULES_H_
#define ZO_SCHEDULES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zo {

enum class ScheduleTag {
  kConvexLipschitz,
  kConvexSmooth,
  kNonconvexLipschitz,
  kNonconvexSmooth,
  kSphereConvex,
  kExplicit,
};

std::string_view ScheduleTagName(ScheduleTag tag);
ScheduleTag ParseScheduleTag(std::string_view name);

enum class DirectionKernel { kGaussian, kSphere };

struct Schedule {
  double eta = 0.0;
  double delta = 0.0;
  std::optional<double> xi;
  double alpha = 0.0;
  // T must exceed this (or reach it, for the nonconvex smooth case) for the
  // prescription to be valid.
  double min_horizon = 1.0;
  std::int64_t horizon = 0;
  ScheduleTag tag = ScheduleTag::kExplicit;
  // Validity violations are reported here rather than thrown.
  std::vector<std::string> warnings;

  bool valid() const { return warnings.empty(); }
};

double ContractionRate(double l0, double eta, double delta, int d, DirectionKernel kernel);

// Convex, L0-Lipschitz. With R known:
//   eta = R^{3/2} / (2 sqrt2 L0 sqrt(d) T^{3/4}),  delta = sqrt(R) L0^{-q} T^{-1/4},
//   valid for T > L0^{2q} R^2.
// With R unknown the R = 1 forms are used.
Schedule ConvexLipschitzSchedule(double l0, double radius, int d, std::int64_t horizon,
                                 double q = 0.0, bool radius_known = true);

// Convex and smooth:
//   eta = R^{4/3} / (2 sqrt2 L0 d^{2/3} T^{2/3}),  delta = R^{1/3} d^{-1/6} T^{-1/6},
//   valid for T > R^2.
Schedule ConvexSmoothSchedule(double l0, double radius, int d, std::int64_t horizon,
                              bool radius_known = true);

// Nonconvex, L0-Lipschitz, smoothing gap pinned to eps_f:
//   eta = eps^{3/2} / (2 sqrt2 L0^2 d^{3/2} T^{1/2}),  delta = eps / (sqrt(d) L0),
//   valid for T > 1 / (d eps).
Schedule NonconvexLipschitzSchedule(double l0, double eps_f, int d, std::int64_t horizon);

// Nonconvex and smooth:
//   eta = 1 / (2 sqrt2 L0 d^{4/3} T^{1/2}),  delta = 1 / (d^{5/6} T^{1/4}).
Schedule NonconvexSmoothSchedule(double l0, int d, std::int64_t horizon);

// Convex, unit-sphere directions on r B ⊆ X ⊆ rbar B:
//   eta = rbar^{3/2} / (2 sqrt2 L0 sqrt(d) T^{3/4}),  delta = sqrt(rbar d) L0^{-q} T^{-1/4},
//   xi = delta / r,  valid for T > rbar^2 L0^{2q}.
// Throws ConfigError when delta / r > 1 (no feasible shrink).
Schedule SphereConvexSchedule(double l0, double outer_radius, double inner_radius, int d,
                              std::int64_t horizon, double q = 0.0);

}  // namespace zo

#endif  // ZO_SCHEDULES_H_
