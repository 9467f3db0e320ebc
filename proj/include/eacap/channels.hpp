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
#include <stdexcept>

#include "eacap/matrix.hpp"
#include "eacap/quantum.hpp"

namespace eacap {

/// Isotropic depolarizing channel Gamma_p[rho] = sum_i p_i sigma_i rho sigma_i
/// with p_0 = 1-p and p_1 = p_2 = p_3 = p/3.
class DepolarizingParams {
 public:
  explicit DepolarizingParams(double p) : p_(p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
      throw std::invalid_argument("depolarizing noise parameter must be in [0,1]");
  }

  double p() const { return p_; }

  double weight(Pauli op) const {
    return op == Pauli::I ? 1.0 - p_ : p_ / 3.0;
  }

 private:
  double p_;
};

/// General Pauli channel: an extension point beyond the isotropic case. Not
/// used by the simulation pipeline, which rejects anisotropic timing instead.
class PauliWeights {
 public:
  explicit PauliWeights(const std::array<double, 4>& w) : w_(w) {
    double sum = 0.0;
    for (double x : w_) {
      if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("Pauli weights must be non-negative");
      sum += x;
    }
    if (std::abs(sum - 1.0) > kDefaultTol)
      throw std::invalid_argument("Pauli weights must sum to 1");
  }

  explicit PauliWeights(const DepolarizingParams& params)
      : PauliWeights(std::array<double, 4>{
            params.weight(Pauli::I), params.weight(Pauli::X),
            params.weight(Pauli::Y), params.weight(Pauli::Z)}) {}

  double weight(Pauli op) const { return w_[static_cast<std::size_t>(op)]; }

 private:
  std::array<double, 4> w_;
};

/// Interference visibility of the entangled-pair source, in [0,1].
class Visibility {
 public:
  Visibility() : v_(1.0) {}
  explicit Visibility(double v) : v_(v) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      throw std::invalid_argument("visibility must be in [0,1]");
  }

  double value() const { return v_; }

 private:
  double v_;
};

/// Liquid-crystal switching schedule: each Pauli is activated for t_i out of
/// a period T. Equal activation times give the isotropic depolarizing channel
/// with p_exp = (t1+t2+t3)/T; unequal times are rejected.
class LcTimingModel {
 public:
  LcTimingModel(double t1, double t2, double t3, double period)
      : t1_(t1), t2_(t2), t3_(t3), period_(period) {
    for (double t : {t1, t2, t3})
      if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("activation times must be non-negative");
    if (!std::isfinite(period) || period <= 0.0)
      throw std::invalid_argument("cycle period must be positive");
    if (t1 != t2 || t2 != t3)
      throw std::invalid_argument(
          "unequal activation times do not give a depolarizing channel");
    if (delta() > period)
      throw std::invalid_argument("total activation time exceeds the period");
  }

  double t1() const { return t1_; }
  double t2() const { return t2_; }
  double t3() const { return t3_; }
  double period() const { return period_; }
  double delta() const { return t1_ + t2_ + t3_; }

 private:
  double t1_, t2_, t3_, period_;
};

inline double timing_to_pexp(const LcTimingModel& model) {
  return model.delta() / model.period();
}

/// Pauli channel acting on qubit A of a two-qubit state.
inline DensityMatrix apply_pauli_channel_a(const DensityMatrix& state,
                                           const PauliWeights& weights) {
  Mat4 out;
  for (Pauli op : kAllPaulis) {
    const double w = weights.weight(op);
    if (w == 0.0) continue;
    out = out + apply_on_qubit_a(pauli_matrix(op), state.mat()) * Complex{w, 0.0};
  }
  return DensityMatrix(out);
}

inline DensityMatrix depolarize_qubit_a(const DensityMatrix& state,
                                        const DepolarizingParams& params) {
  return apply_pauli_channel_a(state, PauliWeights(params));
}

/// Werner state rho_v = v |psi-><psi-| + (1-v) 1/4.
inline DensityMatrix werner_input(Visibility visibility) {
  const double v = visibility.value();
  const Mat4 m = bell_density(Bell::PsiMinus) * Complex{v, 0.0} +
                 Mat4::identity() * Complex{(1.0 - v) / 4.0, 0.0};
  return DensityMatrix(m);
}

/// Depolarizing parameter equivalent to imperfect visibility: p' = 3(1-v)/4.
inline DepolarizingParams residual_noise(Visibility visibility) {
  return DepolarizingParams(3.0 * (1.0 - visibility.value()) / 4.0);
}

/// Combined noise of a Werner input followed by a depolarizing channel of
/// strength p_exp: a single depolarizing channel with p = v*p_exp + 3(1-v)/4.
/// The combination is in [0,1] whenever both inputs are, so no clamping.
inline DepolarizingParams effective_noise(Visibility visibility, double p_exp) {
  if (!std::isfinite(p_exp) || p_exp < 0.0 || p_exp > 1.0)
    throw std::invalid_argument("p_exp must be in [0,1]");
  const double v = visibility.value();
  return DepolarizingParams(v * p_exp + 3.0 * (1.0 - v) / 4.0);
}

}  // namespace eacap
