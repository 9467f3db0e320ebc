// Copyright 2026 The eacap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eacap/eacap.hpp"

namespace {

struct CliOptions {
  std::uint64_t seed = eacap::kDefaultSeed;
  std::string format = "csv";
  std::string output;

  double visibility = 0.94;
  double p_exp = 0.0;
  double mean_counts = eacap::kDefaultMeanCounts;
  std::string error_method = "delta";
  int bootstrap_resamples = eacap::kDefaultBootstrapResamples;

  std::string grid = "0:1:101";
  int grid_points = 51;
  double tolerance = eacap::kDefaultTol;
};

eacap::ExperimentConfig make_config(const CliOptions& opt) {
  eacap::ExperimentConfig cfg;
  cfg.visibility = eacap::Visibility(opt.visibility);
  cfg.p_exp = opt.p_exp;
  cfg.mean_counts_per_input = opt.mean_counts;
  cfg.seed = opt.seed;
  cfg.error_method = opt.error_method == "bootstrap"
                         ? eacap::ErrorMethod::Bootstrap
                         : eacap::ErrorMethod::Delta;
  cfg.bootstrap_resamples = opt.bootstrap_resamples;
  return cfg;
}

void add_experiment_flags(CLI::App* sub, CliOptions& opt) {
  sub->add_option("--visibility", opt.visibility,
                  "source visibility in [0,1]")
      ->capture_default_str();
  sub->add_option("--mean-counts", opt.mean_counts,
                  "expected coincidences per input state")
      ->capture_default_str();
  sub->add_option("--error-method", opt.error_method,
                  "uncertainty estimator")
      ->check(CLI::IsMember({"delta", "bootstrap"}))
      ->capture_default_str();
  sub->add_option("--bootstrap-resamples", opt.bootstrap_resamples,
                  "resamples for --error-method bootstrap")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;

  CLI::App app{
      "Simulator for entanglement-assisted classical communication over a "
      "depolarizing qubit channel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eacap::kToolVersion));
  app.add_option("--seed", opt.seed, "RNG seed (fixed default, not entropy)")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "output path (default stdout)");

  CLI::App* cap = app.add_subcommand(
      "capacity", "closed-form capacity over a noise grid");
  cap->fallthrough();
  cap->add_option("--grid", opt.grid, "noise grid as min:max:steps")
      ->capture_default_str();

  CLI::App* sim = app.add_subcommand(
      "simulate", "one simulated coincidence acquisition and its estimate");
  sim->fallthrough();
  sim->add_option("--p-exp", opt.p_exp, "channel noise parameter in [0,1]")
      ->capture_default_str();
  add_experiment_flags(sim, opt);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "simulated experiment across a p_exp grid");
  sweep->fallthrough();
  sweep->add_option("--grid", opt.grid, "p_exp grid as min:max:steps")
      ->required();
  add_experiment_flags(sweep, opt);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check analytic formulas against the density-matrix "
                "pipeline");
  verify->fallthrough();
  verify->add_option("--grid-points", opt.grid_points,
                     "points on the 1-D noise grids")
      ->capture_default_str();
  verify->add_option("--tolerance", opt.tolerance, "pass threshold")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const eacap::OutputFormat format = opt.format == "json"
                                           ? eacap::OutputFormat::Json
                                           : eacap::OutputFormat::Csv;
    if (app.got_subcommand(cap)) {
      const eacap::GridSpec grid = eacap::GridSpec::parse(opt.grid);
      eacap::write_output(
          eacap::serialize(eacap::cmd_capacity(grid, format, opt.seed)),
          opt.output);
    } else if (app.got_subcommand(sim)) {
      eacap::write_output(
          eacap::serialize(eacap::cmd_simulate(make_config(opt), format)),
          opt.output);
    } else if (app.got_subcommand(sweep)) {
      const eacap::GridSpec grid = eacap::GridSpec::parse(opt.grid);
      eacap::write_output(
          eacap::serialize(eacap::cmd_sweep(make_config(opt), grid, format)),
          opt.output);
    } else {
      const eacap::VerificationReport report =
          eacap::run_verification(opt.grid_points, opt.tolerance);
      eacap::write_output(eacap::render_report(report), opt.output);
      if (!report.all_passed()) return 1;
    }
    return 0;
  } catch (const eacap::EstimationError& e) {
    std::cerr << "estimation error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
