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

// zorf: run, validate and list zeroth-order online optimization experiments.
//
// Exit codes: 0 success, 1 config error, 2 runtime abort.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zo/errors.h"
#include "zo/runner.h"

namespace {

constexpr int kConfigError = 1;
constexpr int kRuntimeAbort = 2;

zo::ExperimentConfig Load(const std::string& path) {
  // A bare preset name is accepted in place of a file.
  for (const auto& p : zo::ListPresets()) {
    if (path == p.name) return zo::ParseExperimentConfig(zo::PresetConfigJson(path));
  }
  return zo::LoadExperimentConfig(path);
}

int Run(const std::string& config_path, std::optional<std::string> out,
        std::optional<int> trials, std::optional<std::uint64_t> seed,
        std::optional<std::string> preset) {
  zo::ExperimentConfig config = Load(config_path);
  zo::RunOverrides overrides;
  if (!out) {
    if (const char* env = std::getenv("ZO_OUT_DIR"); env && *env) out = env;
  }
  overrides.output_dir = out;
  overrides.trials = trials;
  overrides.seed = seed;
  overrides.preset = preset;
  const zo::ExperimentSummary summary = zo::RunExperiment(config, overrides);
  for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& e : summary.estimators) {
    std::cout << zo::EstimatorName(e.estimator);
    if (e.skipped) {
      std::cout << "  skipped: " << *e.skipped << "\n";
      continue;
    }
    std::cout << "  eta=" << zo::FormatDouble(e.step.eta)
              << " delta=" << zo::FormatDouble(e.step.delta) << " (" << e.step.source << ")";
    if (!e.mean_cost.empty()) std::cout << "  final cost=" << zo::FormatDouble(e.mean_cost.back());
    if (!e.mean_regret.empty()) {
      std::cout << "  regret=" << zo::FormatDouble(e.mean_regret.back())
                << " |regret|=" << zo::FormatDouble(e.mean_abs_regret.back());
    }
    if (e.regret_slope) std::cout << "  slope=" << zo::FormatDouble(*e.regret_slope);
    if (e.aborted_trials) std::cout << "  aborted trials=" << e.aborted_trials;
    std::cout << "\n";
  }
  std::cout << "wrote " << summary.output_dir << "\n";
  return summary.aborted ? kRuntimeAbort : 0;
}

int Validate(const std::string& config_path) {
  const zo::ExperimentConfig config = Load(config_path);
  int errors = 0;
  for (const auto& issue : zo::ValidateConfig(config)) {
    const bool error = issue.severity == zo::ConfigIssue::Severity::kError;
    errors += error;
    std::cout << (error ? "error: " : "warning: ") << issue.message << "\n";
  }
  if (errors == 0) std::cout << "ok\n";
  return errors ? kConfigError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeroth-order online optimization experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out, preset;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Run an experiment and write traces and summaries");
  run->add_option("--config", config_path, "JSON config file or preset name")->required();
  run->add_option("--out", out, "Output directory (else ZO_OUT_DIR, else the config's)");
  run->add_option("--trials", trials, "Override the number of trials")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Override the base seed");
  run->add_option("--preset", preset, "Problem scale preset")
      ->check(CLI::IsMember({"paper", "desk"}));

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a config and print warnings and errors");
  validate->add_option("--config", validate_path, "JSON config file or preset name")->required();

  std::string preset_name;
  auto* list = app.add_subcommand("list-presets", "List built-in experiment presets");
  list->add_option("name", preset_name, "Print this preset's config JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) return Run(config_path, out, trials, seed, preset);
    if (*validate) return Validate(validate_path);
    if (*list) {
      if (!preset_name.empty()) {
        std::cout << zo::PresetConfigJson(preset_name);
        return 0;
      }
      for (const auto& p : zo::ListPresets()) std::cout << p.name << "\t" << p.description << "\n";
      return 0;
    }
  } catch (const zo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kRuntimeAbort;
  }
  return 0;
}
