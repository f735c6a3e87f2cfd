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
#include <limits>
#include <numbers>

#include "ristile/analytic.hpp"
#include "ristile/quadrature.hpp"

using namespace ristile;
using Catch::Approx;

namespace {

const Mode kTop{1, 1, false}, kMid{1, 2, false}, kLow{2, 2, false};
const Mode kTopC{1, 1, true}, kMidC{1, 2, true}, kLowC{2, 2, true};
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("eigenvalue laws") {
  for (EigLaw law : {EigLaw::largest, EigLaw::smallest}) {
    CHECK(cdf_lambda(law, 0.0) == 0.0);
    CHECK(cdf_lambda(law, -1.0) == 0.0);
    CHECK(cdf_lambda(law, kInf) == 1.0);
    CHECK(cdf_lambda(law, 60.0) == Approx(1.0).margin(1e-15));
    double prev = 0.0;
    for (double y = 0.01; y < 20.0; y += 0.01) {
      const double f = cdf_lambda(law, y);
      REQUIRE(f >= prev);
      prev = f;
    }
    for (double y : {0.2, 1.0, 3.0, 8.0})
      CHECK(integrate([&](double t) { return pdf_lambda(law, t); }, 0.0, y) == Approx(cdf_lambda(law, y)).epsilon(1e-12));
    CHECK(integrate([&](double t) { return 1.0 - cdf_lambda(law, t); }, 0.0, kInf) == Approx(eig_mean(law)).epsilon(1e-11));
  }
  CHECK(cdf_lambda(EigLaw::largest, 1.0) == Approx(0.031696959722285727).epsilon(1e-14));
  CHECK(cdf_lambda(EigLaw::smallest, 1.0) == Approx(1.0 - std::exp(-2.0)).epsilon(1e-15));
  CHECK(eig_mean(EigLaw::largest) == 3.5);
  CHECK(eig_mean(EigLaw::smallest) == 0.5);
  CHECK(eig_law_for_index(1) == EigLaw::largest);
  CHECK_THROWS_AS(eig_law_for_index(3), std::invalid_argument);
  // largest is stochastically above smallest
  for (double y = 0.05; y < 10.0; y += 0.05) REQUIRE(cdf_lambda(EigLaw::largest, y) <= cdf_lambda(EigLaw::smallest, y));
}

TEST_CASE("Z laws") {
  CHECK(cdf_z_cmp(0.0) == 0.0);
  CHECK(cdf_z_cmp(1.0) == 1.0);
  CHECK(cdf_z_cmp(0.5) == Approx(0.10730091830127584).epsilon(1e-14));
  CHECK(cdf_z_uncomp(0.3) == 0.3);
  CHECK(cdf_z_uncomp(1.7) == 1.0);
  for (double z = 0.01; z < 1.0; z += 0.01) REQUIRE(cdf_z_cmp(z) <= cdf_z_uncomp(z));
  CHECK(integrate([](double z) { return 1.0 - cdf_z_cmp(z); }, 0.0, 1.0) == Approx(mean_z_cmp()).epsilon(1e-11));
  CHECK(mean_z_cmp() == Approx(0.5 * (1.0 + std::numbers::pi * std::numbers::pi / 16.0)).epsilon(1e-15));
}

TEST_CASE("SNR gain and mode gap constants") {
  CHECK(snr_gain_linear() == Approx(1.0 + std::numbers::pi * std::numbers::pi / 16.0).epsilon(1e-15));
  CHECK(snr_gain_db() == Approx(2.0866980486473280).epsilon(1e-13));
  const ModeGap g = mode_gap();
  CHECK(g.derived_ratio == 7.0);
  CHECK(g.derived_db == Approx(8.4509804001425683).epsilon(1e-13));
  CHECK(g.quoted_ratio == 6.0);
  CHECK(g.quoted_db == 7.8);
}

TEST_CASE("outage reference values") {
  struct Row {
    Mode m;
    double x, p;
  };
  const Row rows[] = {
      {kLow, 0.01, 0.269146443459},   {kMid, 0.01, 0.0394669734578},   {kTop, 0.01, 0.00149223299531},
      {kLowC, 0.01, 0.156580137942},  {kMidC, 0.01, 0.011132972086},   {kTopC, 0.01, 1.73424493195e-6},
      {kLow, 0.25, 0.864978186503},   {kMid, 0.25, 0.389997435249},    {kTop, 0.25, 0.0372710620976},
      {kLowC, 0.25, 0.772031686407},  {kMidC, 0.25, 0.220454108515},   {kTopC, 0.25, 0.00120831310251},
      {kLow, 1.0, 0.983992762319},    {kMid, 1.0, 0.735136435025},     {kTop, 1.0, 0.14644014978},
      {kLowC, 1.0, 0.965126477353},   {kMidC, 1.0, 0.571743288407},    {kTopC, 1.0, 0.0208127914791},
  };
  for (const Row& r : rows) {
    CAPTURE(r.m.name(), r.x);
    CHECK(outage_closed_form({r.m, r.x}) == Approx(r.p).epsilon(1e-10).margin(1e-13));
    CHECK(outage_quadrature({r.m, r.x}) == Approx(r.p).epsilon(1e-10).margin(1e-13));
  }
}

TEST_CASE("cross modes share one expression") {
  for (bool c : {false, true})
    for (double x : {0.03, 0.4, 3.0})
      CHECK(outage_closed_form({{1, 2, c}, x}) == outage_closed_form({{2, 1, c}, x}));
  for (bool c : {false, true})
    for (double x : {0.03, 0.4, 3.0})
      CHECK(outage_quadrature({{1, 2, c}, x}) == Approx(outage_quadrature({{2, 1, c}, x})).epsilon(1e-12));
}

TEST_CASE("outage limits and ordering") {
  for (const Mode& m : {kTop, kMid, kLow, kTopC, kMidC, kLowC}) {
    CHECK(outage_closed_form({m, 0.0}) == 0.0);
    CHECK(outage_closed_form({m, kInf}) == 1.0);
    CHECK(outage_closed_form({m, 200.0}) == Approx(1.0).margin(1e-6));
    CHECK_THROWS_AS(outage_closed_form({m, -1.0}), std::domain_error);
  }
  // small-x behaviour: P_2^(2)(1e-8) is 5.78e-6, i.e. not below 1e-6
  CHECK(outage_closed_form({kLow, 1e-8}) == Approx(5.784e-6).epsilon(1e-3));
  for (double x : {0.02, 0.2, 1.0, 4.0}) {
    CHECK(outage_closed_form({kTopC, x}) < outage_closed_form({kTop, x}));
    CHECK(outage_closed_form({kMidC, x}) < outage_closed_form({kMid, x}));
    CHECK(outage_closed_form({kLowC, x}) < outage_closed_form({kLow, x}));
    CHECK(outage_closed_form({kTop, x}) < outage_closed_form({kMid, x}));
    CHECK(outage_closed_form({kMid, x}) < outage_closed_form({kLow, x}));
  }
}

TEST_CASE("mean mode SNR") {
  CHECK(mean_mode_snr(kTop, 2.0) == Approx(2.0 * 0.5 * 3.5 * 3.5));
  CHECK(mean_mode_snr(kMid, 1.0) == Approx(0.5 * 3.5 * 0.5));
  CHECK(mean_mode_snr({2, 1, false}, 1.0) == mean_mode_snr(kMid, 1.0));
  CHECK(mean_mode_snr(kTopC, 1.0) / mean_mode_snr(kTop, 1.0) == Approx(snr_gain_linear()));
  CHECK(mean_mode_snr(kTop, 1.0) / mean_mode_snr(kMid, 1.0) == Approx(7.0));
  CHECK_THROWS_AS(mean_mode_snr(kTop, 0.0), std::domain_error);
}

TEST_CASE("throughput reference values") {
  CHECK(throughput_closed_r22(1.0) == Approx(0.10125095677574775).epsilon(1e-10));
  CHECK(throughput_closed_r22(10.0) == Approx(0.54876516983511528).epsilon(1e-10));
  CHECK(throughput_closed_r22_cmp(1.0) == Approx(0.15598792450821200).epsilon(1e-9));
  CHECK(throughput_closed_r22_cmp(10.0) == Approx(0.77337100437655992).epsilon(1e-9));
  CHECK(throughput(kLow, 10.0) == Approx(0.54876516983511528).epsilon(1e-6));
  CHECK(throughput(kLowC, 1.0) == Approx(0.15598792450821200).epsilon(1e-6));
}

TEST_CASE("throughput orderings and bounds") {
  for (double gb : {0.3, 3.0, 30.0}) {
    const double r = throughput(kMid, gb);
    CHECK(throughput(kMidC, gb) > r);
    CHECK(throughput(kTop, gb) > r);
    // Jensen: E ln(1 + gamma) <= ln(1 + E gamma)
    CHECK(r <= std::log1p(mean_mode_snr(kMid, gb)));
  }
  CHECK(throughput(kTop, 1e-3) < 1e-3 * mean_mode_snr(kTop, 1.0) * 1.0001);
  CHECK_THROWS_AS(throughput(kTop, -1.0), std::domain_error);
  CHECK_THROWS_AS(throughput_closed_r22(0.0), std::domain_error);
}
