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
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace eacap {

using Complex = std::complex<double>;

/// Absolute tolerance for exact-arithmetic comparisons, ~1e4 x double epsilon
/// for products of 4x4 matrices.
inline constexpr double kDefaultTol = 1e-12;

/// Slack allowed below zero for eigenvalues of composed channel outputs.
inline constexpr double kPsdSlack = 1e-10;

/// Dense row-major N x N complex matrix with value semantics. Only the small
/// fixed sizes used here (N = 2 for single-qubit operators, N = 4 for
/// two-qubit states); all arithmetic is plain O(N^3) loops.
template <std::size_t N>
class ComplexMatrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr ComplexMatrix() = default;
  explicit constexpr ComplexMatrix(const std::array<Complex, N * N>& entries)
      : a_(entries) {}

  static constexpr ComplexMatrix identity() {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return a_[r * N + c];
  }

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    ComplexMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex v = (*this)(r, k);
        if (v == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += v * o(k, c);
      }
    return m;
  }

  ComplexMatrix operator*(Complex s) const {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.a_[i] = a_[i] * s;
    return m;
  }

  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

  ComplexMatrix adjoint() const {
    ComplexMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_finite() const {
    for (const Complex& z : a_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

 private:
  std::array<Complex, N * N> a_{};
};

using Mat2 = ComplexMatrix<2>;
using Mat4 = ComplexMatrix<4>;

template <std::size_t M, std::size_t N>
ComplexMatrix<M * N> kron(const ComplexMatrix<M>& a, const ComplexMatrix<N>& b) {
  ComplexMatrix<M * N> m;
  for (std::size_t ar = 0; ar < M; ++ar)
    for (std::size_t ac = 0; ac < M; ++ac)
      for (std::size_t br = 0; br < N; ++br)
        for (std::size_t bc = 0; bc < N; ++bc)
          m(ar * N + br, ac * N + bc) = a(ar, ac) * b(br, bc);
  return m;
}

template <std::size_t N>
double max_abs_diff(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
  double d = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

template <std::size_t N>
bool approx_equal(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b,
                  double tol = kDefaultTol) {
  return max_abs_diff(a, b) <= tol;
}

template <std::size_t N>
bool is_hermitian(const ComplexMatrix<N>& a, double tol = kDefaultTol) {
  return max_abs_diff(a, a.adjoint()) <= tol;
}

template <std::size_t N>
double frobenius_norm(const ComplexMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// returned in ascending order. The input is symmetrized first, so small
/// Hermiticity violations from rounding are tolerated.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(ComplexMatrix<N> a) {
  a = (a + a.adjoint()) * 0.5;

  auto off_norm = [](const ComplexMatrix<N>& m) {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (r != c) s += std::norm(m(r, c));
    return std::sqrt(s);
  };

  const double scale = frobenius_norm(a);
  const double stop = 1e-15 * scale;

  for (int sweep = 0; sweep < 50 && off_norm(a) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex z = a(p, q);
        const double gamma = std::abs(z);
        if (gamma == 0.0) continue;
        // Phase rotation makes the (p,q) block real symmetric, then a real
        // Jacobi rotation annihilates it: t solves t^2 + 2*theta*t - 1 = 0.
        const double phi = std::arg(z);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * gamma);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex ephi = std::polar(1.0, -phi);

        ComplexMatrix<N> u = ComplexMatrix<N>::identity();
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * ephi;
        u(q, q) = c * ephi;
        a = u.adjoint() * a * u;
      }
    }
    a = (a + a.adjoint()) * 0.5;
  }

  std::array<double, N> eig{};
  for (std::size_t i = 0; i < N; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

template <std::size_t N>
double min_eigenvalue(const ComplexMatrix<N>& a) {
  return hermitian_eigenvalues(a)[0];
}

/// Trace norm (sum of |eigenvalue|) of a Hermitian matrix.
template <std::size_t N>
double trace_norm(const ComplexMatrix<N>& a) {
  double s = 0.0;
  for (double e : hermitian_eigenvalues(a)) s += std::abs(e);
  return s;
}

}  // namespace eacap
