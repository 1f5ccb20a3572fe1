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

// Seeded multi-trial experiments driven by a JSON config.
//
// Every (estimator, trial) cell gets a fresh problem built from the trial's
// derived seed, so all estimators face the same objective sequence and the
// same direction stream in a given trial. Outputs under the output directory:
//
//   config.json         the resolved configuration
//   environment.json    problem parameters of trial 0 at t = 0
//   traces/<est>.csv    trial,t,x_norm,f_value,realized_cost,est_sq_norm,queries
//   summary.csv         estimator,metric,t,mean,std
//   summary.json        step sizes, comparator, slopes, variation estimates, skips
//
// Static regret is signed: on drifting problems a tracking learner can beat the
// best fixed point. The absolute form is reported next to it.
//
// Numbers are written as shortest round-trip decimals, so reruns of one
// config produce byte-identical files.

#ifndef ZO_RUNNER_H_
#define ZO_RUNNER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "zo/estimators.h"
#include "zo/feasible_set.h"
#include "zo/lqr_env.h"
#include "zo/problem.h"
#include "zo/resource_grid_env.h"
#include "zo/schedules.h"
#include "zo/synthetic_problems.h"

namespace zo {

struct ProblemSpec {
  // zero | drifting_quadratic | random_walk_offset | additive_noise |
  // bounded_variation_adversary | lqr | resource_grid
  std::string kind = "drifting_quadratic";
  // paper | desk, for lqr and resource_grid.
  std::string preset;
  DriftingQuadraticOptions quadratic;  // the problem itself, or the wrapped base
  double noise_std = 0.0;              // random_walk_offset, additive_noise
  double initial_offset = 0.0;         // random_walk_offset
  double vf = 0.0;                     // bounded_variation_adversary
  LqrOptions lqr;
  ResourceGridOptions grid;
  // false forbids a second query per step (two-point cells are then skipped).
  bool simulation = true;
};

struct SetSpec {
  std::string kind = "unconstrained";  // unconstrained | ball | box
  double radius = 1.0;
  std::vector<double> center;  // empty = origin
  std::vector<double> lo, hi;  // single entry = broadcast
  std::optional<double> inner_radius, outer_radius;
};

struct StepOverride {
  std::optional<double> eta, delta;
};

struct ScheduleSpec {
  ScheduleTag tag = ScheduleTag::kExplicit;
  std::optional<double> l0;  // defaults to the problem's L0
  std::optional<double> radius;  // R; defaults to the set's outer radius
  bool radius_known = true;
  double q = 0.0;
  double eps_f = 1.0;
  std::optional<double> rbar, r;  // default to the set radii
  // Explicit values; also fill in whatever a theorem schedule does not set.
  std::optional<double> eta, delta, xi;
  std::map<EstimatorKind, StepOverride> per_estimator;
  // Step-size grid search on separate tuning seeds; picks the eta with the
  // lowest mean total realized cost.
  std::vector<double> eta_grid;
  int tuning_trials = 2;
  std::uint64_t tuning_seed = 0x7475'6e65ULL;
};

struct ExperimentConfig {
  std::string name = "experiment";
  ProblemSpec problem;
  std::vector<EstimatorKind> estimators = {EstimatorKind::kResidual};
  ScheduleSpec schedule;
  SetSpec set;
  std::vector<double> x0;  // single entry = broadcast
  std::int64_t horizon = 1;
  int trials = 1;
  std::uint64_t base_seed = 0;
  std::string output_dir = "out";
  int threads = 0;  // 0 = hardware concurrency
  // Monte-Carlo directions per step for the variation probe; 0 disables it.
  int variation_samples = 0;
};

// Throws ConfigError naming the offending field.
ExperimentConfig ParseExperimentConfig(const std::string& json_text);
ExperimentConfig LoadExperimentConfig(const std::string& path);
std::string ConfigToJson(const ExperimentConfig& config);

struct ConfigIssue {
  enum class Severity { kWarning, kError };
  Severity severity = Severity::kWarning;
  std::string message;
};
std::vector<ConfigIssue> ValidateConfig(const ExperimentConfig& config);

// Builds the problem of one trial.
std::unique_ptr<OnlineProblem> MakeProblem(const ProblemSpec& spec, std::uint64_t seed);
FeasibleSet MakeSet(const SetSpec& spec, int dimension);

// (problem seed, direction seed) of trial k.
std::pair<std::uint64_t, std::uint64_t> TrialSeeds(std::uint64_t base_seed, std::uint64_t trial);

struct ResolvedStep {
  Schedule schedule;
  double eta = 0.0;
  double delta = 0.0;
  double xi = 0.0;
  std::string source;  // schedule tag, "explicit", or "tuned"
};
ResolvedStep ResolveStep(const ExperimentConfig& config, EstimatorKind estimator,
                         const OnlineProblem& problem, const FeasibleSet& set);

struct EstimatorSummary {
  EstimatorKind estimator = EstimatorKind::kResidual;
  std::optional<std::string> skipped;  // reason, when the cell did not run
  ResolvedStep step;
  std::vector<std::pair<double, double>> tuning;  // (eta, score)
  int aborted_trials = 0;
  std::vector<double> mean_cost;        // per step, across trials
  std::vector<double> mean_regret;      // cumulative, when a comparator exists
  std::vector<double> mean_abs_regret;  // cumulative sum of |f_t(x_t) - f_t(x*)|
  std::vector<double> variance;         // estimator variance per step
  std::vector<double> mean_est_sq_norm;
  std::optional<double> regret_slope;
  std::optional<double> vf_hat, w_hat, w_tilde_hat;
  bool contraction_warning = false;
};

struct ExperimentSummary {
  std::vector<EstimatorSummary> estimators;
  std::vector<std::string> warnings;
  std::string output_dir;
  bool aborted = false;
  const EstimatorSummary* Find(EstimatorKind kind) const;
};

struct RunOverrides {
  std::optional<std::string> output_dir;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> preset;
  bool write_files = true;
};

// Throws ConfigError for invalid configs; aborted trials are reported in the
// summary rather than thrown.
ExperimentSummary RunExperiment(ExperimentConfig config, const RunOverrides& overrides = {});

struct PresetInfo {
  std::string name;
  std::string description;
};
std::vector<PresetInfo> ListPresets();
// JSON config text of a named preset. Throws ConfigError on unknown names.
std::string PresetConfigJson(const std::string& name);

// Shortest decimal that parses back to the same double.
std::string FormatDouble(double value);

}  // namespace zo

#endif  // ZO_RUNNER_H_
