// SPDX-License-Identifier: Apache-2.0
//
// ristile: analysis toolkit for two-tile RIS-assisted 2x2 MIMO links
// Copyright (C) 2026 The ristile authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISTILE_COMPLEX2_HPP
#define RISTILE_COMPLEX2_HPP

#include <array>
#include <complex>

namespace ristile {

using Complex = std::complex<double>;

/// Column vector in C^2.
struct ComplexVec2 {
  std::array<Complex, 2> c{};

  constexpr Complex& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
  constexpr const Complex& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

  double norm_squared() const { return std::norm(c[0]) + std::norm(c[1]); }
  double norm() const;

  static constexpr ComplexVec2 unit(int k) {
    ComplexVec2 v;
    v[k] = 1.0;
    return v;
  }
};

/// Hermitian inner product a^dagger b.
Complex dot(const ComplexVec2& a, const ComplexVec2& b);

/// 2x2 complex matrix, row-major.
class ComplexMat2 {
 public:
  constexpr ComplexMat2() = default;
  constexpr ComplexMat2(Complex m00, Complex m01, Complex m10, Complex m11)
      : e_{m00, m01, m10, m11} {}

  static constexpr ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr ComplexMat2 diag(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }
  static constexpr ComplexMat2 from_columns(const ComplexVec2& c0, const ComplexVec2& c1) {
    return {c0[0], c1[0], c0[1], c1[1]};
  }

  constexpr Complex& operator()(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
  constexpr const Complex& operator()(int r, int c) const {
    return e_[static_cast<std::size_t>(2 * r + c)];
  }

  ComplexVec2 col(int c) const { return {{(*this)(0, c), (*this)(1, c)}}; }
  void set_col(int c, const ComplexVec2& v) {
    (*this)(0, c) = v[0];
    (*this)(1, c) = v[1];
  }

  ComplexMat2 adjoint() const;
  Complex det() const;
  double frobenius_norm() const;
  bool all_finite() const;

  friend ComplexMat2 operator*(const ComplexMat2& a, const ComplexMat2& b);
  friend ComplexVec2 operator*(const ComplexMat2& a, const ComplexVec2& v);
  friend ComplexMat2 operator+(const ComplexMat2& a, const ComplexMat2& b);
  friend ComplexMat2 operator-(const ComplexMat2& a, const ComplexMat2& b);
  friend ComplexMat2 operator*(Complex s, const ComplexMat2& a);

 private:
  std::array<Complex, 4> e_{};
};

/// Max-abs entrywise distance.
double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b);

/// ||m^dagger m - I||_F
double unitarity_defect(const ComplexMat2& m);

/// Singular value decomposition m = u * diag(sigma) * v^dagger.
///
/// sigma[0] >= sigma[1] >= 0. Each column of v is gauge-fixed so that its
/// largest-modulus component is real and nonnegative (ties go to row 0);
/// the matching column of u carries the same phase. When sigma[0] == sigma[1]
/// the pairing of singular vectors to indices is arbitrary but deterministic.
struct Svd2 {
  ComplexMat2 u;
  std::array<double, 2> sigma{};
  ComplexMat2 v;

  ComplexMat2 reconstruct() const;
};

Svd2 svd2(const ComplexMat2& m);

/// Angles of the four-parameter form of U(2):
///
///   [ e^{i t11} cos t12   -e^{i(t11+t21)} sin t12 ]
///   [ e^{i t22} sin t12    e^{i(t22+t21)} cos t12 ]
///
/// theta11, theta21, theta22 in [0, 2pi); theta12 in [0, pi/2].
struct UnitaryAngles {
  double theta11 = 0.0;
  double theta12 = 0.0;
  double theta21 = 0.0;
  double theta22 = 0.0;
};

/// Throws std::invalid_argument when an angle is out of range.
ComplexMat2 unitary_from_angles(const UnitaryAngles& a);

/// Inverse of unitary_from_angles. Where the parameterization is
/// degenerate the canonical branch is used: theta11 = 0 when cos t12 = 0,
/// theta22 = 0 when sin t12 = 0. Throws std::invalid_argument when the
/// input is not unitary to 1e-10.
UnitaryAngles angles_from_unitary(const ComplexMat2& s);

/// Wraps an angle into [0, 2pi).
double wrap_two_pi(double x);

/// Wraps an angle into [-pi, pi).
double wrap_pi(double x);

}  // namespace ristile

#endif
