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
#include <optional>
#include <stdexcept>

#include "eacap/channels.hpp"
#include "eacap/matrix.hpp"
#include "eacap/quantum.hpp"

namespace eacap {

/// Row-sum tolerance for conditional tables. Looser than kDefaultTol because
/// estimated tables come from normalized counts.
inline constexpr double kRowSumTol = 1e-9;

/// 4x4 table of conditional probabilities p(y|x): row x = transmitted Bell
/// state, column y = measured Bell state, both in Bell enum order.
class ConditionalTable {
 public:
  explicit ConditionalTable(const std::array<double, 16>& entries)
      : e_(entries) {
    for (double x : e_)
      if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw std::invalid_argument("conditional probabilities must be in [0,1]");
    for (std::size_t x = 0; x < 4; ++x) {
      double row = 0.0;
      for (std::size_t y = 0; y < 4; ++y) row += at(x, y);
      if (std::abs(row - 1.0) > kRowSumTol)
        throw std::invalid_argument("conditional table row does not sum to 1");
    }
  }

  double at(std::size_t x, std::size_t y) const { return e_[x * 4 + y]; }
  double operator()(Bell x, Bell y) const {
    return at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  }

 private:
  std::array<double, 16> e_;
};

/// Mutual information in bits, optionally with a one-standard-deviation
/// uncertainty (absent for analytic values).
struct MutualInfoResult {
  double bits = 0.0;
  std::optional<double> sigma;
};

/// Entanglement-assisted classical capacity of the depolarizing channel:
/// C = 2 + (1-p) log2(1-p) + p log2(p/3), with 0 log 0 = 0 at the endpoints.
inline double eacc(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0)
    throw std::invalid_argument("noise parameter must be in [0,1]");
  double c = 2.0;
  if (p < 1.0) c += (1.0 - p) * std::log2(1.0 - p);
  if (p > 0.0) c += p * std::log2(p / 3.0);
  return c;
}

inline double eacc(const DepolarizingParams& params) { return eacc(params.p()); }

/// Conditional table of the depolarizing channel on Bell inputs: the sent
/// state survives with probability 1-p and is mapped to each other Bell
/// state with probability p/3.
inline ConditionalTable analytic_conditional(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0)
    throw std::invalid_argument("noise parameter must be in [0,1]");
  std::array<double, 16> e{};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) e[x * 4 + y] = (x == y) ? 1.0 - p : p / 3.0;
  return ConditionalTable(e);
}

inline ConditionalTable analytic_conditional(const DepolarizingParams& params) {
  return analytic_conditional(params.p());
}

/// I = sum_x p1(x) sum_y p(y|x) log2(p(y|x) / p2(y)) with
/// p2(y) = sum_x p1(x) p(y|x). Zero-probability terms contribute 0. Tiny
/// negative totals from cancellation are clamped to 0.
inline MutualInfoResult mutual_information(const ConditionalTable& table,
                                           const std::array<double, 4>& prior) {
  double sum = 0.0;
  for (double x : prior) {
    if (!std::isfinite(x) || x < 0.0)
      throw std::invalid_argument("prior entries must be non-negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kRowSumTol)
    throw std::invalid_argument("prior must sum to 1");

  std::array<double, 4> p2{};
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t x = 0; x < 4; ++x) p2[y] += prior[x] * table.at(x, y);

  double bits = 0.0;
  for (std::size_t x = 0; x < 4; ++x) {
    if (prior[x] == 0.0) continue;
    for (std::size_t y = 0; y < 4; ++y) {
      const double pyx = table.at(x, y);
      if (pyx == 0.0) continue;
      if (p2[y] == 0.0)
        throw std::logic_error("p2(y) = 0 with p(y|x) > 0: inconsistent table");
      bits += prior[x] * pyx * std::log2(pyx / p2[y]);
    }
  }
  return MutualInfoResult{std::max(0.0, bits), std::nullopt};
}

inline MutualInfoResult mutual_information_uniform(const ConditionalTable& table) {
  return mutual_information(table, {0.25, 0.25, 0.25, 0.25});
}

}  // namespace eacap
