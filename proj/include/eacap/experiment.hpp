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

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eacap/channels.hpp"
#include "eacap/information.hpp"
#include "eacap/quantum.hpp"

namespace eacap {

enum class ErrorMethod { Delta, Bootstrap };

/// Fixed default seed so every published number is reproducible; never
/// replaced by entropy.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Default expected coincidences per input state over its four projection
/// windows, mimicking 10 s acquisitions at table-top rates.
inline constexpr double kDefaultMeanCounts = 4e3;

inline constexpr int kDefaultBootstrapResamples = 1000;

struct ExperimentConfig {
  Visibility visibility{};
  double p_exp = 0.0;
  double mean_counts_per_input = kDefaultMeanCounts;
  std::uint64_t seed = kDefaultSeed;
  ErrorMethod error_method = ErrorMethod::Delta;
  int bootstrap_resamples = kDefaultBootstrapResamples;

  void validate() const {
    if (!std::isfinite(p_exp) || p_exp < 0.0 || p_exp > 1.0)
      throw std::invalid_argument("p_exp must be in [0,1]");
    if (!std::isfinite(mean_counts_per_input) || mean_counts_per_input <= 0.0)
      throw std::invalid_argument("mean counts per input must be positive");
    if (bootstrap_resamples < 2)
      throw std::invalid_argument("bootstrap needs at least 2 resamples");
  }
};

/// Raised when counts cannot support an estimate (an input state with zero
/// total coincidences).
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 4x4 coincidence counts, cell (x,y) = counts for input Bell state x under
/// projection onto Bell state y, with the generating config attached.
class CountsTable {
 public:
  CountsTable(const std::array<std::uint64_t, 16>& counts,
              const ExperimentConfig& config)
      : c_(counts), config_(config) {}

  std::uint64_t at(std::size_t x, std::size_t y) const { return c_[x * 4 + y]; }

  std::uint64_t row_total(std::size_t x) const {
    std::uint64_t t = 0;
    for (std::size_t y = 0; y < 4; ++y) t += at(x, y);
    return t;
  }

  const std::array<std::uint64_t, 16>& raw() const { return c_; }
  const ExperimentConfig& config() const { return config_; }

 private:
  std::array<std::uint64_t, 16> c_;
  ExperimentConfig config_;
};

struct SweepRecord {
  double p_exp = 0.0;
  double p_effective = 0.0;
  double i_measured = 0.0;
  double i_sigma = 0.0;
  double c_theory = 0.0;
  /// Set when estimation failed at this point; i_measured/i_sigma are NaN.
  std::optional<std::string> error;
};

/// splitmix64 output function. Used only to spread (seed, stream) pairs into
/// well-separated engine seeds; the engine itself is mt19937_64.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kCountsStream = 0;
inline constexpr std::uint64_t kBootstrapStream = 1;

inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(mix_seed(seed, stream));
}

/// Poisson draw; a zero (or negative underflow) mean gives exactly 0, so
/// impossible cells stay empty.
inline std::uint64_t sample_poisson(std::mt19937_64& engine, double mean) {
  if (mean <= 0.0) return 0;
  std::poisson_distribution<std::uint64_t> dist(mean);
  return dist(engine);
}

/// Per-cell detection probabilities through the full density-matrix pipeline:
/// Werner input, message encoding on qubit A, depolarizing channel of
/// strength p_exp, Bell projection. Coincides with
/// analytic_conditional(effective_noise(v, p_exp)).
inline ConditionalTable true_cell_probabilities(const ExperimentConfig& config) {
  config.validate();
  const DensityMatrix input = werner_input(config.visibility);
  const DepolarizingParams channel(config.p_exp);
  std::array<double, 16> e{};
  for (unsigned msg = 0; msg < 4; ++msg) {
    const DensityMatrix received =
        depolarize_qubit_a(encode_message(msg, input), channel);
    const std::array<double, 4> probs = bell_measurement_probs(received);
    for (std::size_t y = 0; y < 4; ++y) e[msg * 4 + y] = probs[y];
  }
  return ConditionalTable(e);
}

/// One simulated acquisition: each cell is an independent Poisson draw with
/// mean mean_counts_per_input * p(y|x), reflecting the four projections being
/// measured in separate equal-length windows. Deterministic given the seed.
inline CountsTable simulate_counts(const ExperimentConfig& config) {
  config.validate();
  const ConditionalTable truth = true_cell_probabilities(config);
  std::mt19937_64 engine = stream_engine(config.seed, kCountsStream);
  std::array<std::uint64_t, 16> counts{};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      counts[x * 4 + y] =
          sample_poisson(engine, config.mean_counts_per_input * truth.at(x, y));
  return CountsTable(counts, config);
}

/// Row-normalized counts: entry (x,y) = N_xy / sum_y N_xy.
inline ConditionalTable estimate_conditionals(const CountsTable& counts) {
  std::array<double, 16> e{};
  for (std::size_t x = 0; x < 4; ++x) {
    const std::uint64_t total = counts.row_total(x);
    if (total == 0)
      throw EstimationError("no coincidences recorded for input state " +
                            std::string(bell_label(static_cast<Bell>(x))));
    for (std::size_t y = 0; y < 4; ++y)
      e[x * 4 + y] =
          static_cast<double>(counts.at(x, y)) / static_cast<double>(total);
  }
  return ConditionalTable(e);
}

/// First-order Poisson error propagation through row normalization and the
/// mutual information. With q(y|x) = N_xy/R_x and p2(y) = sum_x q(y|x)/4,
/// the 1/ln2 cross terms cancel and
///   dI/dN_xy = [log2(q_xy/p2_y) - sum_v q_xv log2(q_xv/p2_v)] / (4 R_x),
/// so var(I) = sum_xy (dI/dN_xy)^2 N_xy. Zero-count cells contribute their
/// limit, 0.
inline double delta_method_sigma(const CountsTable& counts) {
  std::array<double, 4> row{};
  std::array<std::array<double, 4>, 4> q{};
  for (std::size_t x = 0; x < 4; ++x) {
    const std::uint64_t total = counts.row_total(x);
    if (total == 0)
      throw EstimationError("no coincidences recorded for input state " +
                            std::string(bell_label(static_cast<Bell>(x))));
    row[x] = static_cast<double>(total);
    for (std::size_t y = 0; y < 4; ++y)
      q[x][y] = static_cast<double>(counts.at(x, y)) / row[x];
  }

  std::array<double, 4> p2{};
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t x = 0; x < 4; ++x) p2[y] += 0.25 * q[x][y];

  std::array<double, 4> row_kl{};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      if (q[x][y] > 0.0) row_kl[x] += q[x][y] * std::log2(q[x][y] / p2[y]);

  double var = 0.0;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      if (counts.at(x, y) == 0) continue;
      const double d = (std::log2(q[x][y] / p2[y]) - row_kl[x]) / (4.0 * row[x]);
      var += d * d * static_cast<double>(counts.at(x, y));
    }
  return std::sqrt(var);
}

/// Parametric bootstrap: resample every cell as Poisson(N_xy), re-estimate I,
/// report the sample standard deviation. Resamples that empty out a whole
/// row are discarded (the estimator is undefined there); a cap on attempts
/// turns pathological inputs into an error instead of a hang.
inline double bootstrap_sigma(const CountsTable& counts) {
  const int resamples = counts.config().bootstrap_resamples;
  std::mt19937_64 engine = stream_engine(counts.config().seed, kBootstrapStream);

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(resamples));
  const long max_attempts = 10L * resamples + 100;
  long attempts = 0;
  while (values.size() < static_cast<std::size_t>(resamples)) {
    if (attempts++ >= max_attempts)
      throw EstimationError(
          "bootstrap exhausted: resampled counts keep emptying an input row");
    std::array<std::uint64_t, 16> re{};
    for (std::size_t i = 0; i < 16; ++i)
      re[i] = sample_poisson(engine, static_cast<double>(counts.raw()[i]));

    bool rows_ok = true;
    for (std::size_t x = 0; x < 4 && rows_ok; ++x) {
      std::uint64_t total = 0;
      for (std::size_t y = 0; y < 4; ++y) total += re[x * 4 + y];
      rows_ok = total > 0;
    }
    if (!rows_ok) continue;

    const CountsTable resampled(re, counts.config());
    values.push_back(mutual_information_uniform(estimate_conditionals(resampled)).bits);
  }

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

inline MutualInfoResult estimate_mutual_information(const CountsTable& counts,
                                                    ErrorMethod method) {
  MutualInfoResult result = mutual_information_uniform(estimate_conditionals(counts));
  result.sigma = method == ErrorMethod::Delta ? delta_method_sigma(counts)
                                              : bootstrap_sigma(counts);
  return result;
}

inline MutualInfoResult estimate_mutual_information(const CountsTable& counts) {
  return estimate_mutual_information(counts, counts.config().error_method);
}

/// Simulate and estimate one record per config, in order. Each point gets
/// its own RNG stream derived from (config seed, point index), so results do
/// not depend on evaluation order. Estimation failures mark the record and
/// the sweep continues.
inline std::vector<SweepRecord> run_sweep(std::span<const ExperimentConfig> configs) {
  if (configs.empty())
    throw std::invalid_argument("sweep requires at least one point");

  std::vector<SweepRecord> records;
  records.reserve(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ExperimentConfig cfg = configs[i];
    cfg.validate();
    cfg.seed = mix_seed(cfg.seed, i);

    SweepRecord rec;
    rec.p_exp = cfg.p_exp;
    const DepolarizingParams effective = effective_noise(cfg.visibility, cfg.p_exp);
    rec.p_effective = effective.p();
    rec.c_theory = eacc(effective);
    try {
      const MutualInfoResult mi = estimate_mutual_information(simulate_counts(cfg));
      rec.i_measured = mi.bits;
      rec.i_sigma = mi.sigma.value_or(0.0);
    } catch (const EstimationError& err) {
      rec.i_measured = std::numeric_limits<double>::quiet_NaN();
      rec.i_sigma = std::numeric_limits<double>::quiet_NaN();
      rec.error = err.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace eacap
