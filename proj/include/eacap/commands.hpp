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

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eacap/experiment.hpp"
#include "eacap/information.hpp"
#include "eacap/output.hpp"
#include "eacap/verify.hpp"

namespace eacap {

/// Uniform grid over [min,max] with `steps` points, endpoints included.
/// Parsed from the "min:max:steps" CLI form.
struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  static GridSpec parse(std::string_view text) {
    const auto fields = detail::split(text, ':');
    if (fields.size() != 3)
      throw std::invalid_argument("grid must be min:max:steps, got: " +
                                  std::string(text));
    GridSpec g;
    g.min = parse_double(fields[0]);
    g.max = parse_double(fields[1]);
    const auto res = std::from_chars(
        fields[2].data(), fields[2].data() + fields[2].size(), g.steps);
    if (res.ec != std::errc{} || res.ptr != fields[2].data() + fields[2].size())
      throw std::invalid_argument("malformed grid step count: " +
                                  std::string(fields[2]));
    g.validate();
    return g;
  }

  void validate() const {
    if (!(min >= 0.0) || !(max <= 1.0) || !(min <= max))
      throw std::invalid_argument("grid range must satisfy 0 <= min <= max <= 1");
    if (steps < 1) throw std::invalid_argument("grid needs at least 1 step");
    if (steps == 1 && min != max)
      throw std::invalid_argument("a single-point grid needs min == max");
  }

  std::vector<double> points() const {
    validate();
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
      pts.push_back(min);
      return pts;
    }
    for (int i = 0; i < steps; ++i) {
      double p = min + (max - min) * (static_cast<double>(i) / (steps - 1));
      if (i == 0) p = min;
      if (i == steps - 1) p = max;
      pts.push_back(std::clamp(p, min, max));
    }
    return pts;
  }
};

inline constexpr std::string_view format_label(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

inline constexpr std::string_view method_label(ErrorMethod m) {
  return m == ErrorMethod::Delta ? "delta" : "bootstrap";
}

namespace detail {

inline nlohmann::json grid_json(const GridSpec& grid) {
  return {{"min", grid.min}, {"max", grid.max}, {"steps", grid.steps}};
}

inline nlohmann::json config_json(const ExperimentConfig& cfg) {
  return {{"visibility", cfg.visibility.value()},
          {"mean_counts_per_input", cfg.mean_counts_per_input},
          {"error_method", std::string(method_label(cfg.error_method))},
          {"bootstrap_resamples", cfg.bootstrap_resamples}};
}

}  // namespace detail

inline OutputRecordSet cmd_capacity(const GridSpec& grid, OutputFormat format,
                                    std::uint64_t seed = kDefaultSeed) {
  grid.validate();
  OutputRecordSet set;
  set.format = format;
  set.command = "capacity";
  set.seed = seed;
  set.metadata["grid"] = detail::grid_json(grid);

  std::vector<CapacitySample> samples;
  for (double p : grid.points()) samples.push_back({p, eacc(p)});
  set.records = std::move(samples);
  return set;
}

/// One simulated acquisition and its estimate; the raw counts table rides
/// along in the metadata. Estimation failures propagate to the caller.
inline OutputRecordSet cmd_simulate(const ExperimentConfig& config,
                                    OutputFormat format) {
  config.validate();
  const CountsTable counts = simulate_counts(config);
  const MutualInfoResult mi = estimate_mutual_information(counts);

  SweepRecord rec;
  rec.p_exp = config.p_exp;
  const DepolarizingParams effective =
      effective_noise(config.visibility, config.p_exp);
  rec.p_effective = effective.p();
  rec.c_theory = eacc(effective);
  rec.i_measured = mi.bits;
  rec.i_sigma = mi.sigma.value_or(0.0);

  OutputRecordSet set;
  set.format = format;
  set.command = "simulate";
  set.seed = config.seed;
  set.metadata = detail::config_json(config);
  set.metadata["p_exp"] = config.p_exp;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t x = 0; x < 4; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < 4; ++y) row.push_back(counts.at(x, y));
    rows.push_back(std::move(row));
  }
  set.metadata["counts"] = std::move(rows);
  set.records = std::vector<SweepRecord>{rec};
  return set;
}

inline OutputRecordSet cmd_sweep(const ExperimentConfig& base,
                                 const GridSpec& grid, OutputFormat format) {
  std::vector<ExperimentConfig> configs;
  for (double p : grid.points()) {
    ExperimentConfig cfg = base;
    cfg.p_exp = p;
    cfg.validate();
    configs.push_back(cfg);
  }

  OutputRecordSet set;
  set.format = format;
  set.command = "sweep";
  set.seed = base.seed;
  set.metadata = detail::config_json(base);
  set.metadata["grid"] = detail::grid_json(grid);
  set.records = run_sweep(configs);
  return set;
}

inline std::string render_report(const VerificationReport& report) {
  std::string out;
  for (const VerificationCheck& c : report.checks) {
    out += c.passed ? "PASS" : "FAIL";
    out += "  " + c.name + ": max deviation " + format_double(c.max_deviation) +
           " at " + c.worst_case + " (tolerance " + format_double(c.tolerance) +
           ")\n";
  }
  out += report.all_passed() ? "all checks passed\n" : "verification FAILED\n";
  return out;
}

/// Write to path, or to stdout when path is empty.
inline void write_output(std::string_view text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << text;
  if (!file) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace eacap
