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

#include "ristile/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ristile {

ChannelRealization ChannelRealization::from_matrices(const ComplexMat2& g, const ComplexMat2& h) {
  return {g, h, svd2(g), svd2(h)};
}

double ChannelRealization::lambda(int j) const {
  if (j != 1 && j != 2) throw std::out_of_range("lambda index must be 1 or 2");
  const double s = svd_g.sigma[static_cast<std::size_t>(j - 1)];
  return s * s;
}

double ChannelRealization::omega(int i) const {
  if (i != 1 && i != 2) throw std::out_of_range("omega index must be 1 or 2");
  const double s = svd_h.sigma[static_cast<std::size_t>(i - 1)];
  return s * s;
}

ComplexMat2 sample_gaussian_channel(CounterRng& rng) {
  const Complex a = rng.complex_normal();
  const Complex b = rng.complex_normal();
  const Complex c = rng.complex_normal();
  const Complex d = rng.complex_normal();
  return {a, b, c, d};
}

ChannelRealization sample_channel(CounterRng& rng) {
  const ComplexMat2 g = sample_gaussian_channel(rng);
  const ComplexMat2 h = sample_gaussian_channel(rng);
  return ChannelRealization::from_matrices(g, h);
}

UnitaryAngles sample_haar_angles(CounterRng& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  UnitaryAngles a;
  a.theta12 = std::asin(std::sqrt(rng.uniform()));
  // 2pi * u can round up to 2pi for u just below 1.
  a.theta11 = wrap_two_pi(two_pi * rng.uniform());
  a.theta21 = wrap_two_pi(two_pi * rng.uniform());
  a.theta22 = wrap_two_pi(two_pi * rng.uniform());
  return a;
}

ComplexMat2 sample_haar_unitary(CounterRng& rng) {
  return unitary_from_angles(sample_haar_angles(rng));
}

double angle_diff_pdf(double x) {
  if (!(x >= -std::numbers::pi / 2 && x <= std::numbers::pi / 2)) return 0.0;
  const double ax = std::abs(x);
  const double c2 = std::cos(2.0 * x);
  return 0.5 * (std::numbers::pi / 2 * c2 - ax * c2 + 0.5 * std::sin(2.0 * ax));
}

double angle_sum_pdf(double x) {
  if (!(x >= 0.0 && x <= std::numbers::pi)) return 0.0;
  const double s2 = std::sin(2.0 * x);
  const double c2 = std::cos(2.0 * x);
  if (x < std::numbers::pi / 2) return 0.25 * s2 - 0.5 * x * c2;
  return -0.25 * s2 - 0.5 * (std::numbers::pi - x) * c2;
}

}  // namespace ristile
