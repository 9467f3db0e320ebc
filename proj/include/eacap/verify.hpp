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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "eacap/channels.hpp"
#include "eacap/experiment.hpp"
#include "eacap/information.hpp"
#include "eacap/output.hpp"
#include "eacap/quantum.hpp"

namespace eacap {

struct VerificationCheck {
  std::string name;
  double max_deviation = 0.0;
  std::string worst_case;
  double tolerance = kDefaultTol;
  bool passed = false;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool all_passed() const {
    for (const VerificationCheck& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Cross-checks the closed-form capacity, the analytic conditional table,
/// the density-matrix pipeline, the noise-composition law, and the Bell
/// permutation structure against each other. grid_points controls the 1-D
/// noise grids; the 2-D composition check always uses 11 points per axis.
/// A zero tolerance makes every check fail (deviations are rounding-level
/// but nonzero), which exercises the failure path end to end.
inline VerificationReport run_verification(int grid_points = 51,
                                           double tolerance = kDefaultTol) {
  if (grid_points < 2)
    throw std::invalid_argument("verification grid needs at least 2 points");
  if (!std::isfinite(tolerance) || tolerance < 0.0)
    throw std::invalid_argument("tolerance must be non-negative");

  VerificationReport report;
  const auto add = [&](std::string name, double dev, std::string worst) {
    report.checks.push_back({std::move(name), dev, std::move(worst), tolerance,
                             dev <= tolerance});
  };

  {
    double dev = std::abs(eacc(0.0) - 2.0);
    std::string worst = "p=0";
    const double mid = std::abs(eacc(0.75));
    if (mid > dev) {
      dev = mid;
      worst = "p=0.75";
    }
    const double end = std::abs(eacc(1.0) - (2.0 - std::log2(3.0)));
    if (end > dev) {
      dev = end;
      worst = "p=1";
    }
    add("capacity endpoints", dev, worst);
  }

  {
    double dev = -1.0;
    double worst_p = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double p = static_cast<double>(i) / (grid_points - 1);
      const double d =
          std::abs(mutual_information_uniform(analytic_conditional(p)).bits -
                   eacc(p));
      if (d > dev) {
        dev = d;
        worst_p = p;
      }
    }
    add("capacity equals table mutual information", dev,
        "p=" + format_double(worst_p));
  }

  {
    double dev = -1.0;
    double worst_p = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double p = static_cast<double>(i) / (grid_points - 1);
      ExperimentConfig cfg;
      cfg.visibility = Visibility(1.0);
      cfg.p_exp = p;
      const ConditionalTable pipeline = true_cell_probabilities(cfg);
      const ConditionalTable analytic = analytic_conditional(p);
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
          const double d = std::abs(pipeline.at(x, y) - analytic.at(x, y));
          if (d > dev) {
            dev = d;
            worst_p = p;
          }
        }
    }
    add("analytic table equals density pipeline", dev,
        "p=" + format_double(worst_p));
  }

  {
    double dev = -1.0;
    std::string worst;
    const DensityMatrix singlet = DensityMatrix::bell(Bell::PsiMinus);
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const Visibility v(i / 10.0);
        const double p_exp = j / 10.0;
        const DensityMatrix direct =
            depolarize_qubit_a(werner_input(v), DepolarizingParams(p_exp));
        const DensityMatrix composed =
            depolarize_qubit_a(singlet, effective_noise(v, p_exp));
        const double d = trace_norm(direct.mat() - composed.mat());
        if (d > dev) {
          dev = d;
          worst = "v=" + format_double(v.value()) +
                  ",p_exp=" + format_double(p_exp);
        }
      }
    }
    add("noise composition law", dev, worst);
  }

  {
    double dev = -1.0;
    std::string worst;
    for (Bell b : kAllBells) {
      for (Pauli op : kAllPaulis) {
        const Mat4 moved = apply_on_qubit_a(pauli_matrix(op), bell_density(b));
        const Mat4 expected = bell_density(pauli_image(b, op));
        const double d = max_abs_diff(moved, expected);
        if (d > dev) {
          dev = d;
          worst = std::string(bell_label(b)) + "," + std::string(pauli_label(op));
        }
      }
    }
    add("Bell basis permutation", dev, worst);
  }

  return report;
}

}  // namespace eacap
