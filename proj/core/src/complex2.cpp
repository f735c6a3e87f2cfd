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

#include "ristile/complex2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ristile {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Unit phase that rotates the largest-modulus component of v onto the
// nonnegative real axis; ties go to the lower row index.
Complex gauge_phase(const ComplexVec2& v) {
  const int k = std::abs(v[0]) >= std::abs(v[1]) ? 0 : 1;
  const double mag = std::abs(v[k]);
  if (mag == 0.0) return 1.0;
  return std::conj(v[k]) / mag;
}

ComplexVec2 scaled(const ComplexVec2& v, Complex s) { return {{v[0] * s, v[1] * s}}; }

// Orthogonal complement with det(v, perp(v)) = |v|^2.
ComplexVec2 perp(const ComplexVec2& v) { return {{-std::conj(v[1]), std::conj(v[0])}}; }

}  // namespace

double ComplexVec2::norm() const { return std::sqrt(norm_squared()); }

Complex dot(const ComplexVec2& a, const ComplexVec2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

ComplexMat2 ComplexMat2::adjoint() const {
  const auto& m = *this;
  return {std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)), std::conj(m(1, 1))};
}

Complex ComplexMat2::det() const {
  const auto& m = *this;
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double ComplexMat2::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : e_) s += std::norm(x);
  return std::sqrt(s);
}

bool ComplexMat2::all_finite() const {
  return std::all_of(e_.begin(), e_.end(), [](const Complex& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

ComplexMat2 operator*(const ComplexMat2& a, const ComplexMat2& b) {
  ComplexMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

ComplexVec2 operator*(const ComplexMat2& a, const ComplexVec2& v) {
  return {{a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]}};
}

ComplexMat2 operator+(const ComplexMat2& a, const ComplexMat2& b) {
  ComplexMat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

ComplexMat2 operator-(const ComplexMat2& a, const ComplexMat2& b) {
  ComplexMat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

ComplexMat2 operator*(Complex s, const ComplexMat2& a) {
  ComplexMat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.e_[k] = s * a.e_[k];
  return r;
}

double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

double unitarity_defect(const ComplexMat2& m) {
  return (m.adjoint() * m - ComplexMat2::identity()).frobenius_norm();
}

ComplexMat2 Svd2::reconstruct() const {
  return u * ComplexMat2::diag(sigma[0], sigma[1]) * v.adjoint();
}

Svd2 svd2(const ComplexMat2& m) {
  // Eigen-decomposition of the Hermitian Gram matrix [[p, q], [q*, r]].
  const ComplexMat2 gram = m.adjoint() * m;
  const double p = gram(0, 0).real();
  const double r = gram(1, 1).real();
  const Complex q = gram(0, 1);
  const double half_diff = 0.5 * (p - r);
  const double d = std::hypot(half_diff, std::abs(q));

  // Of the two algebraically equivalent eigenvectors for the top eigenvalue
  // pick the one without cancellation.
  ComplexVec2 v1;
  if (d == 0.0) {
    v1 = ComplexVec2::unit(0);
  } else if (half_diff >= 0.0) {
    v1 = {{d + half_diff, std::conj(q)}};
  } else {
    v1 = {{q, d - half_diff}};
  }
  v1 = scaled(v1, 1.0 / v1.norm());
  v1 = scaled(v1, gauge_phase(v1));
  ComplexVec2 v2 = perp(v1);
  v2 = scaled(v2, gauge_phase(v2));

  Svd2 out;
  out.v = ComplexMat2::from_columns(v1, v2);

  const ComplexVec2 mv1 = m * v1;
  const double s1 = mv1.norm();
  if (s1 == 0.0) {
    out.u = ComplexMat2::identity();
    out.sigma = {0.0, 0.0};
    return out;
  }
  const ComplexVec2 u1 = scaled(mv1, 1.0 / s1);
  // Completing u from u1 keeps it unitary to rounding even when sigma2 << sigma1.
  const ComplexVec2 u2_dir = perp(u1);
  const Complex c = dot(u2_dir, m * v2);
  const double s2 = std::min(std::abs(c), s1);
  const ComplexVec2 u2 = std::abs(c) > 0.0 ? scaled(u2_dir, c / std::abs(c)) : u2_dir;

  out.u = ComplexMat2::from_columns(u1, u2);
  out.sigma = {s1, s2};
  return out;
}

double wrap_two_pi(double x) {
  double y = x - kTwoPi * std::floor(x / kTwoPi);
  if (y >= kTwoPi) y -= kTwoPi;
  if (y < 0.0) y = 0.0;
  return y;
}

double wrap_pi(double x) {
  double y = x - kTwoPi * std::floor((x + std::numbers::pi) / kTwoPi);
  if (y >= std::numbers::pi) y -= kTwoPi;
  if (y < -std::numbers::pi) y = -std::numbers::pi;
  return y;
}

ComplexMat2 unitary_from_angles(const UnitaryAngles& a) {
  auto in_circle = [](double t) { return std::isfinite(t) && t >= 0.0 && t < kTwoPi; };
  if (!in_circle(a.theta11) || !in_circle(a.theta21) || !in_circle(a.theta22))
    throw std::invalid_argument("unitary_from_angles: theta11/21/22 must lie in [0, 2pi)");
  if (!std::isfinite(a.theta12) || a.theta12 < 0.0 || a.theta12 > std::numbers::pi / 2)
    throw std::invalid_argument("unitary_from_angles: theta12 must lie in [0, pi/2]");

  const double c = std::cos(a.theta12);
  const double s = std::sin(a.theta12);
  return {std::polar(c, a.theta11), -std::polar(s, a.theta11 + a.theta21),
          std::polar(s, a.theta22), std::polar(c, a.theta22 + a.theta21)};
}

UnitaryAngles angles_from_unitary(const ComplexMat2& s) {
  if (!s.all_finite() || unitarity_defect(s) > 1e-10)
    throw std::invalid_argument("angles_from_unitary: input is not unitary within 1e-10");

  const double c_mod = std::abs(s(0, 0));
  const double s_mod = std::abs(s(1, 0));

  UnitaryAngles a;
  a.theta12 = std::atan2(s_mod, c_mod);
  a.theta11 = c_mod > 0.0 ? wrap_two_pi(std::arg(s(0, 0))) : 0.0;
  a.theta22 = s_mod > 0.0 ? wrap_two_pi(std::arg(s(1, 0))) : 0.0;
  // theta21 from whichever column-2 entry has the larger modulus.
  if (c_mod >= s_mod)
    a.theta21 = wrap_two_pi(std::arg(s(1, 1)) - a.theta22);
  else
    a.theta21 = wrap_two_pi(std::arg(-s(0, 1)) - a.theta11);
  return a;
}

}  // namespace ristile
