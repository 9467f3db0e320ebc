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
#include <cstddef>
#include <stdexcept>
#include <string_view>

#include "eacap/matrix.hpp"

namespace eacap {

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

/// Two-qubit Bell states. The numeric order matches the dense-coding message
/// values 0..3: applying the Pauli that encodes message m on qubit A of the
/// singlet yields the state with enum value m.
enum class Bell { PsiMinus = 0, PsiPlus = 1, PhiMinus = 2, PhiPlus = 3 };

inline constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::I, Pauli::X, Pauli::Y,
                                                    Pauli::Z};
inline constexpr std::array<Bell, 4> kAllBells = {Bell::PsiMinus, Bell::PsiPlus,
                                                  Bell::PhiMinus, Bell::PhiPlus};

inline Mat2 pauli_matrix(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = Complex{0.0, -1.0};
      m(1, 0) = Complex{0.0, 1.0};
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

inline constexpr std::string_view pauli_label(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

inline constexpr std::string_view bell_label(Bell b) {
  switch (b) {
    case Bell::PsiMinus: return "psi-";
    case Bell::PsiPlus: return "psi+";
    case Bell::PhiMinus: return "phi-";
    case Bell::PhiPlus: return "phi+";
  }
  return "?";
}

/// Conventional 1-based index of a Bell state (1 = psi-, ..., 4 = phi+).
inline constexpr int bell_index(Bell b) { return static_cast<int>(b) + 1; }

/// Message value recovered when a dense-coding Bell measurement returns b.
inline constexpr unsigned bell_message(Bell b) {
  return static_cast<unsigned>(b);
}

/// Pauli applied to qubit A of the singlet to encode message m
/// (0 -> I, 1 -> Z, 2 -> X, 3 -> Y, i.e. the two classical bits select
/// the phase flip and the bit flip).
inline constexpr Pauli message_pauli(unsigned msg) {
  switch (msg) {
    case 0: return Pauli::I;
    case 1: return Pauli::Z;
    case 2: return Pauli::X;
    case 3: return Pauli::Y;
  }
  throw std::invalid_argument("message must be in 0..3");
}

inline constexpr Bell message_bell(unsigned msg) {
  if (msg > 3) throw std::invalid_argument("message must be in 0..3");
  return static_cast<Bell>(msg);
}

/// Inverse of message_pauli.
inline constexpr unsigned pauli_message(Pauli p) {
  switch (p) {
    case Pauli::I: return 0;
    case Pauli::Z: return 1;
    case Pauli::X: return 2;
    case Pauli::Y: return 3;
  }
  return 0;
}

/// Bell state reached from b when the given Pauli acts on qubit A. One-sided
/// Paulis permute the Bell basis; with this numbering the permutation is a
/// XOR, the Klein four-group acting on itself.
inline constexpr Bell pauli_image(Bell b, Pauli p) {
  return static_cast<Bell>(static_cast<unsigned>(b) ^ pauli_message(p));
}

/// Density matrix of a Bell state in the computational basis
/// |00>, |01>, |10>, |11> with qubit A as the first tensor factor. Entries
/// are exact (+-0.5), so tests can compare bitwise.
inline Mat4 bell_density(Bell b) {
  Mat4 m;
  switch (b) {
    case Bell::PsiMinus:
      m(1, 1) = 0.5;
      m(2, 2) = 0.5;
      m(1, 2) = -0.5;
      m(2, 1) = -0.5;
      break;
    case Bell::PsiPlus:
      m(1, 1) = 0.5;
      m(2, 2) = 0.5;
      m(1, 2) = 0.5;
      m(2, 1) = 0.5;
      break;
    case Bell::PhiMinus:
      m(0, 0) = 0.5;
      m(3, 3) = 0.5;
      m(0, 3) = -0.5;
      m(3, 0) = -0.5;
      break;
    case Bell::PhiPlus:
      m(0, 0) = 0.5;
      m(3, 3) = 0.5;
      m(0, 3) = 0.5;
      m(3, 0) = 0.5;
      break;
  }
  return m;
}

/// Validated two-qubit density matrix: finite, Hermitian, unit trace, and
/// positive semidefinite up to kPsdSlack.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat4& m, double tol = kDefaultTol) : m_(m) {
    if (!m_.is_finite())
      throw std::invalid_argument("density matrix has non-finite entries");
    if (!is_hermitian(m_, tol))
      throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(m_.trace().real() - 1.0) > tol ||
        std::abs(m_.trace().imag()) > tol)
      throw std::invalid_argument("density matrix trace is not 1");
    if (min_eigenvalue(m_) < -kPsdSlack)
      throw std::invalid_argument("density matrix is not positive semidefinite");
  }

  const Mat4& mat() const { return m_; }

  static DensityMatrix bell(Bell b) { return DensityMatrix(bell_density(b)); }

  static DensityMatrix maximally_mixed() {
    return DensityMatrix(Mat4::identity() * Complex{0.25, 0.0});
  }

 private:
  Mat4 m_;
};

/// rho -> (U (x) 1) rho (U (x) 1)^dagger: a single-qubit operator acting on
/// qubit A of a two-qubit state.
inline Mat4 apply_on_qubit_a(const Mat2& u, const Mat4& rho) {
  const Mat4 full = kron(u, Mat2::identity());
  return full * rho * full.adjoint();
}

/// Pauli conjugation on qubit A, staying in the validated state type.
inline DensityMatrix apply_on_qubit_a(const DensityMatrix& rho, Pauli p) {
  return DensityMatrix(apply_on_qubit_a(pauli_matrix(p), rho.mat()));
}

/// Dense-coding encoding step: message Pauli applied to qubit A of the state.
inline DensityMatrix encode_message(unsigned msg, const DensityMatrix& rho) {
  const Mat2 u = pauli_matrix(message_pauli(msg));
  return DensityMatrix(apply_on_qubit_a(u, rho.mat()));
}

/// Encoding applied to the shared singlet, the ideal dense-coding input.
inline DensityMatrix encode_message(unsigned msg) {
  return encode_message(msg, DensityMatrix::bell(Bell::PsiMinus));
}

/// Outcome probabilities of an ideal Bell-basis measurement, indexed by Bell
/// enum value. Tiny negative values from rounding are clamped to 0.
inline std::array<double, 4> bell_measurement_probs(const DensityMatrix& rho) {
  std::array<double, 4> probs{};
  for (Bell b : kAllBells) {
    const Mat4 proj = bell_density(b);
    Complex t{};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) t += proj(r, c) * rho.mat()(c, r);
    probs[static_cast<std::size_t>(b)] = std::max(0.0, t.real());
  }
  return probs;
}

}  // namespace eacap
