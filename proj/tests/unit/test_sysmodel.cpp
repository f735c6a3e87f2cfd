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

#include "ristile/sampling.hpp"
#include "ristile/sysmodel.hpp"

using namespace ristile;
using Catch::Approx;

namespace {

ChannelRealization draw(std::uint64_t t, std::uint64_t seed = 21) {
  CounterRng rng({seed, 0}, t);
  return sample_channel(rng);
}

const Mode kAllModes[] = {{1, 1, false}, {1, 2, false}, {2, 1, false}, {2, 2, false},
                          {1, 1, true},  {1, 2, true},  {2, 1, true},  {2, 2, true}};

// gamma_bar |sum_k sum_m sum_n conj(b_m) G_mk e^{j phi_k} H_kn a_n|^2
double double_sum_snr(const ChannelRealization& ch, const PhaseConfig& p, const ComplexVec2& a,
                      const ComplexVec2& b, double gamma_bar) {
  Complex s = 0.0;
  const double phi[2] = {p.phi1, p.phi2};
  for (int k = 0; k < 2; ++k)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n)
        s += std::conj(b[m]) * ch.g(m, k) * std::polar(1.0, phi[k]) * ch.h(k, n) * a[n];
  return gamma_bar * std::norm(s);
}

}  // namespace

TEST_CASE("mode names and validation") {
  CHECK(Mode{2, 1, true}.name() == "j1i2-cmp");
  CHECK(Mode{1, 2, false}.name() == "j2i1");
  CHECK_THROWS_AS((Mode{0, 1, false}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Mode{1, 3, false}.validate()), std::invalid_argument);
}

TEST_CASE("diagonal channels select the canonical axes") {
  const auto ch = ChannelRealization::from_matrices(ComplexMat2::diag(3.0, 1.0), ComplexMat2::diag(2.0, 1.0));
  const ModeVectors mv = mode_vectors(ch, {1, 1, false});
  CHECK(std::abs(mv.a[0] - 1.0) < 1e-15);
  CHECK(std::abs(mv.b[0] - 1.0) < 1e-15);
  const SnrSample s = mode_snr(ch, {1, 1, false}, 1.0);
  CHECK(s.gamma == Approx(9.0 * 4.0));
  CHECK(s.z == Approx(1.0));
}

TEST_CASE("compensated phases") {
  SECTION("real positive vectors need no rotation") {
    const PhaseConfig p = compensated_phases({{0.6, 0.8}}, {{0.8, 0.6}});
    CHECK(p.phi1 == 0.0);
    CHECK(p.phi2 == 0.0);
  }
  SECTION("single phased entry") {
    const PhaseConfig p = compensated_phases({{1.0, 0.0}}, {{std::polar(1.0, std::numbers::pi / 3), 0.0}});
    CHECK(p.phi1 == Approx(-std::numbers::pi / 3));
    CHECK(p.phi2 == 0.0);
  }
  SECTION("Haar pairs reach the triangle-inequality bound") {
    for (std::uint64_t t = 0; t < 100000; ++t) {
      CounterRng rng({31, 0}, t);
      const ComplexVec2 v = sample_haar_unitary(rng).col(0);
      const ComplexVec2 w = sample_haar_unitary(rng).col(1);
      const PhaseConfig p = compensated_phases(v, w);
      REQUIRE(p.phi1 >= -std::numbers::pi);
      REQUIRE(p.phi1 < std::numbers::pi);
      const double achieved = std::norm(dot(v, p.matrix() * w));
      REQUIRE(std::abs(achieved - compensated_z(v, w)) < 1e-12);
    }
  }
}

TEST_CASE("instantaneous SNR") {
  const ComplexVec2 e1 = ComplexVec2::unit(0);
  const ComplexMat2 i2 = ComplexMat2::identity();
  CHECK(instantaneous_snr(i2, i2, {}, e1, e1, 1.0) == 1.0);
  const ChannelRealization ch = draw(5);
  const ComplexVec2 a{{Complex(0.6, 0.0), Complex(0.0, 0.8)}};
  const ComplexVec2 b{{Complex(0.0, 1.0), 0.0}};
  const PhaseConfig p{0.4, -1.2};
  const double g1 = instantaneous_snr(ch.g, ch.h, p, a, b, 1.7);
  CHECK(instantaneous_snr(ch.g, ch.h, p, a, b, 3.4) == 2.0 * g1);
  CHECK(g1 == Approx(double_sum_snr(ch, p, a, b, 1.7)).epsilon(1e-12));
  CHECK_THROWS_AS(instantaneous_snr(ch.g, ch.h, p, a, b, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(instantaneous_snr(ch.g, ch.h, p, {{1.0, 1.0}}, b, 1.0), std::invalid_argument);
}

TEST_CASE("mode SNR factorizes and compensation never hurts") {
  for (std::uint64_t t = 0; t < 20000; ++t) {
    const ChannelRealization ch = draw(t);
    for (const Mode& m : kAllModes) {
      const SnrSample s = mode_snr(ch, m, 2.5);
      REQUIRE(s.z >= 0.0);
      REQUIRE(s.z <= 1.0 + 1e-15);
      REQUIRE(s.gamma == Approx(2.5 * s.lambda_j * s.omega_i * s.z).epsilon(1e-12));
      const ModeVectors mv = mode_vectors(ch, m);
      REQUIRE(std::abs(mv.a.norm_squared() - 1.0) < 1e-13);
      REQUIRE(std::abs(mv.b.norm_squared() - 1.0) < 1e-13);
      const double direct = instantaneous_snr(ch.g, ch.h, mode_phases(ch, m), mv.a, mv.b, 2.5);
      REQUIRE(s.gamma == Approx(direct).epsilon(1e-12));
      if (m.compensated) {
        const Mode plain{m.tx_index, m.rx_index, false};
        REQUIRE(s.gamma >= mode_snr(ch, plain, 2.5).gamma * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("compensated Z equals the Appendix angle forms") {
  for (std::uint64_t t = 0; t < 100000; ++t) {
    const ChannelRealization ch = draw(t, 77);
    const double xi = angles_from_unitary(ch.svd_g.v).theta12;
    const double psi = angles_from_unitary(ch.svd_h.u).theta12;
    REQUIRE(mode_snr(ch, {1, 1, true}, 1.0).z == Approx(std::pow(std::cos(xi - psi), 2)).margin(1e-10));
    REQUIRE(mode_snr(ch, {2, 2, true}, 1.0).z == Approx(std::pow(std::cos(xi - psi), 2)).margin(1e-10));
    REQUIRE(mode_snr(ch, {1, 2, true}, 1.0).z == Approx(std::pow(std::sin(xi + psi), 2)).margin(1e-10));
  }
}

TEST_CASE("compensated SNR is invariant to singular-vector phases") {
  for (std::uint64_t t = 0; t < 2000; ++t) {
    ChannelRealization ch = draw(t, 5);
    const double before = mode_snr(ch, {2, 1, true}, 1.0).gamma;
    // rotate a column of V (G side) and the matching column of U to keep G = U S V^dagger
    const Complex ph = std::polar(1.0, 0.3 + 0.001 * static_cast<double>(t));
    ch.svd_g.v.set_col(0, {{ch.svd_g.v(0, 0) * ph, ch.svd_g.v(1, 0) * ph}});
    ch.svd_g.u.set_col(0, {{ch.svd_g.u(0, 0) * ph, ch.svd_g.u(1, 0) * ph}});
    REQUIRE(max_abs_diff(ch.svd_g.reconstruct(), ch.g) < 1e-12 * (1 + ch.g.frobenius_norm()));
    REQUIRE(mode_snr(ch, {2, 1, true}, 1.0).gamma == Approx(before).epsilon(1e-12));
  }
}

TEST_CASE("Channel entry moments") {
  const int n = 200000;
  Complex mean = 0.0;
  double power = 0.0, trace = 0.0;
  for (int t = 0; t < n; ++t) {
    CounterRng rng({44, 0}, static_cast<std::uint64_t>(t));
    const ComplexMat2 g = sample_gaussian_channel(rng);
    mean += g(0, 1);
    power += std::norm(g(1, 0));
    trace += (g.adjoint() * g)(0, 0).real() + (g.adjoint() * g)(1, 1).real();
  }
  CHECK(std::abs(mean / double(n)) < 0.01);
  CHECK(power / n == Approx(1.0).margin(0.01));
  CHECK(trace / n == Approx(4.0).margin(0.03));
}

TEST_CASE("mode (1,1) beats random unit-vector pairs on average") {
  const int n = 100000;
  double best = 0.0, other = 0.0;
  for (int t = 0; t < n; ++t) {
    CounterRng rng({55, 0}, static_cast<std::uint64_t>(t));
    const ChannelRealization ch = sample_channel(rng);
    best += mode_snr(ch, {1, 1, false}, 1.0).gamma;
    const ComplexVec2 a = sample_haar_unitary(rng).col(0);
    const ComplexVec2 b = sample_haar_unitary(rng).col(0);
    other += instantaneous_snr(ch.g, ch.h, {}, a, b, 1.0);
  }
  CHECK(best > 3.0 * other);
}
