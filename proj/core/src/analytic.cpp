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

#include "ristile/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ristile/specfun.hpp"

namespace ristile {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class OutageFamily { max, mid, min };

OutageFamily family_of(const Mode& m) {
  m.validate();
  if (m.tx_index == 1 && m.rx_index == 1) return OutageFamily::max;
  if (m.tx_index == 2 && m.rx_index == 2) return OutageFamily::min;
  return OutageFamily::mid;
}

double require_x(double x) {
  if (!(x >= 0.0)) throw std::domain_error("outage: x must be >= 0");
  return x;
}

// Compensated outage expressions; x > 0.
double outage_cmp_closed(OutageFamily fam, double z, const QuadratureSpec& s) {
  const double z2 = z * z;
  switch (fam) {
    case OutageFamily::max:
      return 1.0 - 4.0 * calI(0, 1, 1, z, s) + 4.0 * calI(0, 2, 1, z, s) - 2.0 * calI(0, 3, 1, z, s) +
             4.0 * calI(0, 1, 2, z, s) - 2.0 * z2 * calI(2, -1, 1, z, s) + 2.0 * z2 * calI(2, 0, 1, z, s) -
             z2 * calI(2, 1, 1, z, s) + 2.0 * z2 * calI(2, -1, 2, z, s) + 2.0 * calI(0, 1, 1, 2 * z, s) -
             2.0 * calI(0, 2, 1, 2 * z, s) + calI(0, 3, 1, 2 * z, s) - 2.0 * calI(0, 1, 2, 2 * z, s);
    case OutageFamily::mid:
      return 1.0 - 4.0 * calI(0, 1, 2, z, s) - 2.0 * z2 * calI(2, -1, 2, z, s) + 2.0 * calI(0, 1, 2, 2 * z, s);
    case OutageFamily::min:
      return 1.0 - 2.0 * calI(0, 1, 2, 2 * z, s);
  }
  return 0.0;
}

// Uncompensated outage expressions; x > 0.
double outage_uncomp_closed(OutageFamily fam, double z, const QuadratureSpec& s) {
  const double z2 = z * z;
  const double rz = std::sqrt(z);
  switch (fam) {
    case OutageFamily::max: {
      const double r2z = std::sqrt(2.0 * z);
      const double k0 = bessel_k(0, 2.0 * rz);
      const double k1 = bessel_k(1, 2.0 * rz);
      const double k2 = bessel_k(2, 2.0 * rz);
      const double g2z = calG(2.0 * z, 1.0, s);
      return 1.0 - 4.0 * z2 * calG(z, 1.0, s) + 8.0 * rz * k1 - 2.0 * z2 * calG(z, -1.0, s) + 8.0 * z2 * g2z -
             4.0 * z * k0 + 4.0 * z * rz * k1 - 2.0 * z2 * k2 + 4.0 * z * bessel_k(0, 2.0 * r2z) +
             8.0 * z2 * g2z - 4.0 * r2z * bessel_k(1, 2.0 * r2z) + 4.0 * z2 * calG(2.0 * z, -1.0, s) -
             16.0 * z2 * calG(4.0 * z, 1.0, s);
    }
    case OutageFamily::mid:
      return 1.0 - 8.0 * z2 * calG(2.0 * z, 1.0, s) - 4.0 * z * bessel_k(0, std::sqrt(8.0 * z)) +
             16.0 * z2 * calG(4.0 * z, 1.0, s);
    case OutageFamily::min:
      return 1.0 - 16.0 * z2 * calG(4.0 * z, 1.0, s);
  }
  return 0.0;
}

}  // namespace

EigLaw eig_law_for_index(int index) {
  if (index == 1) return EigLaw::largest;
  if (index == 2) return EigLaw::smallest;
  throw std::invalid_argument("eigenvalue index must be 1 or 2");
}

double cdf_lambda(EigLaw law, double y) {
  if (!(y > 0.0)) return 0.0;
  if (std::isinf(y)) return 1.0;
  if (law == EigLaw::smallest) return -std::expm1(-2.0 * y);
  const double e = std::exp(-y);
  return 1.0 - 2.0 * e - y * y * e + e * e;
}

double pdf_lambda(EigLaw law, double y) {
  if (!(y > 0.0) || std::isinf(y)) return 0.0;
  if (law == EigLaw::smallest) return 2.0 * std::exp(-2.0 * y);
  const double e = std::exp(-y);
  return 2.0 * e - 2.0 * y * e + y * y * e - 2.0 * e * e;
}

double eig_mean(EigLaw law) {
  // \int_0^inf (1 - F(y)) dy, term by term:
  //   smallest: \int e^{-2y} = 1/2
  //   largest:  \int 2e^{-y} + y^2 e^{-y} - e^{-2y} = 2 + 2 - 1/2
  return law == EigLaw::smallest ? 0.5 : 3.5;
}

double cdf_z_cmp(double z) {
  if (!(z > 0.0)) return 0.0;
  if (z >= 1.0) return 1.0;
  return z - std::sqrt(z * (1.0 - z)) * std::asin(std::sqrt(z));
}

double cdf_z_uncomp(double z) {
  if (!(z > 0.0)) return 0.0;
  return z >= 1.0 ? 1.0 : z;
}

double mean_z_cmp() { return 0.5 * snr_gain_linear(); }

double outage_quadrature(const OutageQuery& q, const QuadratureSpec& spec) {
  const OutageFamily fam = family_of(q.mode);
  (void)fam;
  const double x = require_x(q.x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  spec.validate();

  const EigLaw lambda_law = eig_law_for_index(q.mode.rx_index);
  const EigLaw omega_law = eig_law_for_index(q.mode.tx_index);
  const QuadratureSpec inner_spec{spec.abs_tol, spec.rel_tol * 1e-1, spec.max_subdivisions};

  // E_omega{F_lambda(x / (omega z))}
  auto conditional = [&](double z) {
    if (!(z > 0.0)) return 1.0;
    auto f = [&](double w) { return w > 0.0 ? cdf_lambda(lambda_law, x / (w * z)) * pdf_lambda(omega_law, w) : 0.0; };
    return integrate(f, 0.0, kInf, inner_spec);
  };

  if (!q.mode.compensated) return integrate(conditional, 0.0, 1.0, spec);

  auto over_theta = [&](double theta) {
    const double s = std::sin(theta);
    const double density = 0.5 * std::sin(2.0 * theta) - theta * std::cos(2.0 * theta);
    return conditional(s * s) * density;
  };
  return integrate(over_theta, 0.0, std::numbers::pi / 2, spec);
}

double outage_closed_form(const OutageQuery& q, const QuadratureSpec& spec) {
  const OutageFamily fam = family_of(q.mode);
  const double x = require_x(q.x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return q.mode.compensated ? outage_cmp_closed(fam, x, spec) : outage_uncomp_closed(fam, x, spec);
}

double snr_gain_linear() { return 1.0 + std::numbers::pi * std::numbers::pi / 16.0; }

double snr_gain_db() { return 10.0 * std::log10(snr_gain_linear()); }

ModeGap mode_gap() {
  ModeGap g;
  g.derived_ratio = eig_mean(EigLaw::largest) / eig_mean(EigLaw::smallest);
  g.derived_db = 10.0 * std::log10(g.derived_ratio);
  return g;
}

double mean_mode_snr(const Mode& m, double gamma_bar) {
  m.validate();
  if (!(gamma_bar > 0.0)) throw std::domain_error("mean_mode_snr: gamma_bar must be > 0");
  const double eig = eig_mean(eig_law_for_index(m.rx_index)) * eig_mean(eig_law_for_index(m.tx_index));
  const double mean_z = m.compensated ? mean_z_cmp() : 0.5;
  return gamma_bar * mean_z * eig;
}

double throughput(const Mode& m, double gamma_bar, const QuadratureSpec& spec) {
  m.validate();
  if (!(gamma_bar > 0.0)) throw std::domain_error("throughput: gamma_bar must be > 0");
  spec.validate();
  const QuadratureSpec outage_spec{spec.abs_tol * 1e-1, spec.rel_tol * 1e-1, 2000};
  // z = gamma_bar * x keeps the integrand's scale fixed in x.
  auto f = [&](double x) {
    const double survival = 1.0 - outage_quadrature({m, x}, outage_spec);
    return gamma_bar * survival / (1.0 + gamma_bar * x);
  };
  return integrate(f, 0.0, kInf, spec);
}

double throughput_closed_r22(double gamma_bar, const QuadratureSpec& spec) {
  if (!(gamma_bar > 0.0)) throw std::domain_error("throughput_closed_r22: gamma_bar must be > 0");
  const MeijerParams p{4, 1, {-2.0, 0.0}, {-2.0, -1.0, -1.0, -2.0}};
  return 16.0 / (gamma_bar * gamma_bar) * meijer_g(p, 4.0 / gamma_bar, spec);
}

double throughput_closed_r22_cmp(double gamma_bar, const QuadratureSpec& spec) {
  if (!(gamma_bar > 0.0)) throw std::domain_error("throughput_closed_r22_cmp: gamma_bar must be > 0");
  const MeijerParams p{3, 1, {0.0}, {0.0, 1.0, 0.0}};
  // t = 1 + u^2, dt / sqrt(t - 1) = 2 du
  auto f = [&](double u) {
    const double t = 1.0 + u * u;
    return 2.0 * (2.0 - t) / (t * t) * std::asin(1.0 / std::sqrt(t)) * meijer_g(p, 4.0 * t / gamma_bar, spec);
  };
  return 0.5 * integrate(f, 0.0, kInf, spec) + 0.5 * throughput_closed_r22(gamma_bar, spec);
}

}  // namespace ristile
