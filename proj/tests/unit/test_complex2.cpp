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
#include <numbers>

#include "ristile/complex2.hpp"
#include "ristile/rng.hpp"
#include "ristile/sampling.hpp"

using namespace ristile;
using Catch::Approx;

namespace {

ComplexMat2 random_matrix(std::uint64_t trial) {
  CounterRng rng({42, 0}, trial);
  return sample_gaussian_channel(rng);
}

}  // namespace

TEST_CASE("svd2 reconstructs random matrices") {
  for (std::uint64_t t = 0; t < 2000; ++t) {
    const ComplexMat2 m = random_matrix(t);
    const Svd2 d = svd2(m);
    CHECK(max_abs_diff(d.reconstruct(), m) < 1e-12 * (1.0 + m.frobenius_norm()));
    CHECK(unitarity_defect(d.u) < 1e-12);
    CHECK(unitarity_defect(d.v) < 1e-12);
    CHECK(d.sigma[0] >= d.sigma[1]);
    CHECK(d.sigma[1] >= 0.0);
  }
}

TEST_CASE("svd2 singular values match the Gram eigenvalues") {
  const ComplexMat2 m = random_matrix(7);
  const Svd2 d = svd2(m);
  const ComplexMat2 w = m.adjoint() * m;
  const double tr = (w(0, 0) + w(1, 1)).real();
  const double det = w.det().real();
  CHECK(d.sigma[0] * d.sigma[0] + d.sigma[1] * d.sigma[1] == Approx(tr).epsilon(1e-12));
  CHECK(d.sigma[0] * d.sigma[0] * d.sigma[1] * d.sigma[1] == Approx(det).epsilon(1e-11));
}

TEST_CASE("svd2 gauge: largest entry of each right vector is real and non-negative") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Svd2 d = svd2(random_matrix(t));
    for (int c = 0; c < 2; ++c) {
      const ComplexVec2 v = d.v.col(c);
      const int k = std::abs(v[1]) > std::abs(v[0]) ? 1 : 0;
      CHECK(v[k].real() >= 0.0);
      CHECK(std::abs(v[k].imag()) < 1e-14);
    }
  }
}

TEST_CASE("svd2 degenerate inputs") {
  SECTION("zero matrix") {
    const Svd2 d = svd2(ComplexMat2{});
    CHECK(d.sigma[0] == 0.0);
    CHECK(d.sigma[1] == 0.0);
    CHECK(unitarity_defect(d.u) < 1e-15);
    CHECK(unitarity_defect(d.v) < 1e-15);
  }
  SECTION("identity") {
    const Svd2 d = svd2(ComplexMat2::identity());
    CHECK(d.sigma[0] == Approx(1.0));
    CHECK(d.sigma[1] == Approx(1.0));
    CHECK(max_abs_diff(d.reconstruct(), ComplexMat2::identity()) < 1e-15);
  }
  SECTION("rank one") {
    const ComplexMat2 m{Complex(1, 2), Complex(2, 4), Complex(-1, 0.5), Complex(-2, 1)};
    const Svd2 d = svd2(m);
    CHECK(d.sigma[1] < 1e-14);
    CHECK(max_abs_diff(d.reconstruct(), m) < 1e-14);
    CHECK(unitarity_defect(d.u) < 1e-14);
  }
  SECTION("diagonal with swapped magnitudes") {
    const Svd2 d = svd2(ComplexMat2::diag(0.5, Complex(0, 3)));
    CHECK(d.sigma[0] == Approx(3.0));
    CHECK(d.sigma[1] == Approx(0.5));
  }
}

TEST_CASE("unitary angles round trip") {
  for (std::uint64_t t = 0; t < 500; ++t) {
    CounterRng rng({3, 0}, t);
    const UnitaryAngles a = sample_haar_angles(rng);
    const ComplexMat2 s = unitary_from_angles(a);
    CHECK(unitarity_defect(s) < 1e-14);
    const UnitaryAngles b = angles_from_unitary(s);
    CHECK(max_abs_diff(unitary_from_angles(b), s) < 1e-12);
    CHECK(b.theta12 == Approx(a.theta12).margin(1e-12));
  }
}

TEST_CASE("unitary angle validation") {
  CHECK_THROWS_AS(unitary_from_angles({-0.1, 0.3, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(unitary_from_angles({0.0, 2.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(unitary_from_angles({0.0, 0.3, 2 * std::numbers::pi, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(angles_from_unitary(ComplexMat2{1.0, 1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("angle wrapping") {
  constexpr double pi = std::numbers::pi;
  CHECK(wrap_two_pi(-0.5) == Approx(2 * pi - 0.5));
  CHECK(wrap_two_pi(2 * pi) == 0.0);
  CHECK(wrap_two_pi(7 * pi) == Approx(pi));
  CHECK(wrap_pi(pi) == Approx(-pi));
  CHECK(wrap_pi(-pi) == Approx(-pi));
  CHECK(wrap_pi(3.0) == Approx(3.0));
  for (double x = -20.0; x < 20.0; x += 0.37) {
    const double w = wrap_two_pi(x);
    CHECK(w >= 0.0);
    CHECK(w < 2 * pi);
    const double p = wrap_pi(x);
    CHECK(p >= -pi);
    CHECK(p < pi);
  }
}

TEST_CASE("matrix algebra helpers") {
  const ComplexMat2 a{Complex(1, 1), 2.0, Complex(0, -1), 3.0};
  const ComplexMat2 b = ComplexMat2::from_columns({{1.0, 0.0}}, {{0.0, 1.0}});
  CHECK(max_abs_diff(a * b, a) == 0.0);
  CHECK(max_abs_diff(a + a - a, a) == 0.0);
  CHECK(a.det() == Complex(1, 1) * 3.0 - 2.0 * Complex(0, -1));
  CHECK(a.adjoint()(0, 1) == std::conj(a(1, 0)));
  CHECK(dot(ComplexVec2{{Complex(0, 1), 0.0}}, ComplexVec2{{1.0, 0.0}}) == Complex(0, -1));
  ComplexMat2 bad = a;
  bad(1, 1) = std::nan("");
  CHECK_FALSE(bad.all_finite());
}
