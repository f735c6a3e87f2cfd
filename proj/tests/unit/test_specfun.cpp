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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "ristile/errors.hpp"
#include "ristile/specfun.hpp"

using namespace ristile;
using Catch::Approx;

// Reference values below were computed with mpmath at 30 digits.

TEST_CASE("log_gamma agrees with lgamma on the positive axis") {
  for (double x = 0.05; x < 60.0; x *= 1.37) {
    const std::complex<double> v = log_gamma({x, 0.0});
    CHECK(v.real() == Approx(std::lgamma(x)).epsilon(1e-13).margin(1e-14));
    CHECK(std::abs(v.imag()) < 1e-14);
  }
}

TEST_CASE("log_gamma on the imaginary axis") {
  // |Gamma(iy)|^2 = pi / (y sinh(pi y))
  for (double y : {0.1, 0.7, 2.0, 9.0, 40.0}) {
    const double expected = 0.5 * std::log(std::numbers::pi / (y * std::sinh(std::numbers::pi * y)));
    CHECK(log_gamma({0.0, y}).real() == Approx(expected).epsilon(1e-12).margin(1e-13));
  }
}

TEST_CASE("log_gamma recurrence and reflection") {
  const std::complex<double> zs[] = {{0.3, 4.0}, {-2.7, 1.5}, {5.5, -20.0}, {-0.4, -0.9}};
  for (auto z : zs) {
    const auto lhs = std::exp(log_gamma(z + 1.0));
    const auto rhs = z * std::exp(log_gamma(z));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const auto refl = std::exp(log_gamma(z) + log_gamma(1.0 - z));
    const auto exact = std::numbers::pi / std::sin(std::numbers::pi * z);
    CHECK(std::abs(refl - exact) <= 1e-11 * std::abs(exact));
  }
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), std::domain_error);
}

TEST_CASE("modified Bessel K reference values") {
  struct Row {
    double x, k[4];
  };
  const Row rows[] = {
      {0.1, {2.4270690247020166, 9.8538447808706061, 199.50396464211414, 7990.0124304654362}},
      {1.0, {0.42102443824070833, 0.60190723019723457, 1.6248388986351775, 7.1012628247379445}},
      {10.0, {1.7780062316167652e-5, 1.8648773453825585e-5, 2.1509817006932769e-5, 2.7252700256598692e-5}},
  };
  for (const Row& r : rows)
    for (int n = 0; n < 4; ++n) CHECK(bessel_k(n, r.x) == Approx(r.k[n]).epsilon(1e-13));
  CHECK(bessel_k(-1, 1.0) == bessel_k(1, 1.0));
  CHECK(bessel_k(0, 800.0) == 0.0);
  CHECK_THROWS_AS(bessel_k(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel_k(4, 1.0), std::invalid_argument);
}

TEST_CASE("Bessel K large-argument behaviour") {
  // The leading asymptotic form is only good to ~1/(8x) = 0.6% at x = 20;
  // the two-term form is good to ~1e-4.
  const double x = 20.0;
  const double scaled = bessel_k(0, x) * std::exp(x) * std::sqrt(2.0 * x / std::numbers::pi);
  CHECK(scaled == Approx(0.99392).margin(1e-5));
  CHECK(std::abs(scaled - 1.0) < 1e-2);
  CHECK(std::abs(scaled - (1.0 - 1.0 / (8 * x) + 9.0 / (128 * x * x))) < 1e-4);
}

TEST_CASE("Meijer G reduces to elementary functions") {
  // G^{1,0}_{0,1}(z | b) = z^b e^{-z}
  for (double z : {0.1, 1.0, 7.5}) CHECK(meijer_g({1, 0, {}, {0.5}}, z) == Approx(std::sqrt(z) * std::exp(-z)).epsilon(1e-11));
  // G^{2,0}_{0,2}(1 | 0.3, -0.4) = 2 K_{0.7}(2)
  CHECK(meijer_g({2, 0, {}, {0.3, -0.4}}, 1.0) == Approx(0.25202654261322128).epsilon(1e-11));
  // G^{2,0}_{0,2}(z | 0, 0) = 2 K_0(2 sqrt z)
  for (double z : {0.3, 2.0, 9.0})
    CHECK(meijer_g({2, 0, {}, {0.0, 0.0}}, z) == Approx(2.0 * bessel_k(0, 2.0 * std::sqrt(z))).epsilon(1e-11));
}

TEST_CASE("Meijer G reference values") {
  const MeijerParams g31{3, 1, {0.0}, {0.0, 1.0, 0.0}};
  CHECK(meijer_g(g31, 0.4) == Approx(0.88413024400397616).epsilon(1e-11));
  CHECK(meijer_g(g31, 4.0) == Approx(0.18712729439326819).epsilon(1e-11));
  CHECK(meijer_g(g31, 40.0) == Approx(0.023898308555390447).epsilon(1e-11));
  const MeijerParams g41{4, 1, {-2.0, 0.0}, {-2.0, -1.0, -1.0, -2.0}};
  CHECK(meijer_g(g41, 0.4) == Approx(3.4297823114694709).epsilon(1e-11));
  CHECK(meijer_g(g41, 4.0) == Approx(0.0063281847984842347).epsilon(1e-11));
  CHECK(meijer_g(g41, 12.6) == Approx(0.00022941040730082678).epsilon(1e-11));
}

TEST_CASE("Meijer G does not depend on the contour position") {
  const MeijerParams p{3, 0, {0.0}, {-1.0, -1.0, -2.0}};
  const double base = meijer_g(p, 2.0);
  for (double margin : {0.2, 0.35, 0.8}) CHECK(meijer_g(p, 2.0, {}, margin) == Approx(base).epsilon(1e-11));
}

TEST_CASE("Meijer G parameter validation") {
  CHECK_THROWS_AS((MeijerParams{4, 0, {}, {0.0}}.validate()), std::invalid_argument);
  // delta = 1 + 0 - (1 + 3)/2 = -1: no vertical contour
  CHECK_THROWS_AS((MeijerParams{1, 0, {0.0}, {0.0, 1.0, 2.0}}.validate()), std::invalid_argument);
  // a-poles not separated from b-poles
  CHECK_THROWS_AS((MeijerParams{1, 1, {1.0}, {0.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(meijer_g({1, 0, {}, {0.0}}, -1.0), std::domain_error);
}

TEST_CASE("calG reference values (coalescing b-parameters)") {
  struct Row {
    double z, a, v;
  };
  const Row rows[] = {
      {0.25, 1.0, 6.2942230287536813},      {1.0, 1.0, 0.13502181349695672},
      {4.0, 1.0, 0.0010004523550349637},    {20.0, 1.0, 2.2550194924599074e-7},
      {0.25, -1.0, 22.629226872237173},     {1.0, -1.0, 0.78725127276515658},
      {4.0, -1.0, 0.011821587486560728},    {20.0, -1.0, 7.9407200153732129e-6},
  };
  for (const Row& r : rows) CHECK(calG(r.z, r.a) == Approx(r.v).epsilon(1e-10));
}

TEST_CASE("calI reference values") {
  struct Row {
    int a, alpha;
    double gamma, x, v;
  };
  const Row rows[] = {
      {0, 1, 1.0, 0.5, 0.38319380440108963},  {0, 3, 1.0, 0.1, 1.8672153941814014},
      {0, 2, 2.0, 1.3, 0.046132136901882861}, {2, -1, 2.0, 0.05, 19.356322478103392},
      {2, 1, 1.0, 2.0, 0.15876764469124005},  {2, 0, 1.0, 0.7, 0.4251181006903331},
      {0, 1, 2.0, 0.02, 0.42170993102907902},
  };
  for (const Row& r : rows) CHECK(calI(r.a, r.alpha, r.gamma, r.x) == Approx(r.v).epsilon(1e-9));
  CHECK_THROWS_AS(calI(1, 1, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(calI(0, 4, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(calI(0, 1, 1.0, 0.0), std::domain_error);
}
