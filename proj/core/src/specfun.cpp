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

#include "ristile/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ristile/errors.hpp"

namespace ristile {

namespace {

using cd = std::complex<double>;

// B_{2k} / (2k (2k - 1)), k = 1..8
constexpr double kStirling[8] = {1.0 / 12.0,     -1.0 / 360.0,         1.0 / 1260.0, -1.0 / 1680.0,
                                 1.0 / 1188.0,   -691.0 / 360360.0,    1.0 / 156.0,  -3617.0 / 122400.0};

constexpr double kShiftTo = 10.0;

bool is_nonpositive_integer(cd w) {
  return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real());
}

}  // namespace

cd log_gamma(cd w) {
  if (is_nonpositive_integer(w)) throw std::domain_error("log_gamma: pole at nonpositive integer");

  // Recurrence up to Re(w) >= kShiftTo, where eight Stirling terms are
  // accurate to ~1e-17.
  cd shift_log = 0.0;
  if (w.real() < kShiftTo) {
    cd prod = 1.0;
    while (w.real() < kShiftTo) {
      prod *= w;
      w += 1.0;
      if (std::abs(prod) > 1e250) {
        shift_log += std::log(prod);
        prod = 1.0;
      }
    }
    shift_log += std::log(prod);
  }

  const cd inv = 1.0 / w;
  const cd inv2 = inv * inv;
  cd series = 0.0;
  cd pw = inv;
  for (double c : kStirling) {
    series += c * pw;
    pw *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (w - 0.5) * std::log(w) - w + half_log_two_pi + series - shift_log;
}

double bessel_k(int order, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be > 0");
  const int n = std::abs(order);
  if (n > 3) throw std::invalid_argument("bessel_k: |order| must be <= 3");
  if (x > 700.0) return 0.0;  // underflows
  return std::cyl_bessel_k(static_cast<double>(n), x);
}

void MeijerParams::validate() const {
  if (m < 0 || n < 0 || m > q() || n > p())
    throw std::invalid_argument("MeijerParams: need 0 <= m <= q and 0 <= n <= p");
  if (!(2 * (m + n) > p() + q()))
    throw std::invalid_argument("MeijerParams: vertical contour needs m + n > (p + q) / 2");
  for (double x : a)
    if (!std::isfinite(x)) throw std::invalid_argument("MeijerParams: non-finite a-parameter");
  for (double x : b)
    if (!std::isfinite(x)) throw std::invalid_argument("MeijerParams: non-finite b-parameter");
  double right = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) right = std::min(right, b[static_cast<std::size_t>(j)]);
  double left = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) left = std::max(left, a[static_cast<std::size_t>(k)] - 1.0);
  if (!(left < right))
    throw std::invalid_argument("MeijerParams: Gamma(1-a+s) and Gamma(b-s) poles are not separable");
}

namespace {

struct Contour {
  double c;         // Re s on the line
  double margin;    // distance to the nearest pole
  double decay;     // delta * pi, exponential decay rate in |Im s|
  double exponent;  // algebraic exponent of |Phi| in |Im s|
};

Contour choose_contour(const MeijerParams& p, std::optional<double> margin) {
  double right = std::numeric_limits<double>::infinity();
  for (int j = 0; j < p.m; ++j) right = std::min(right, p.b[static_cast<std::size_t>(j)]);
  double left = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < p.n; ++k) left = std::max(left, p.a[static_cast<std::size_t>(k)] - 1.0);

  double c;
  double d;
  if (std::isinf(right) && std::isinf(left)) {
    c = 0.0;
    d = 0.5;
  } else if (std::isinf(left)) {
    d = margin.value_or(0.5);
    c = right - d;
  } else if (std::isinf(right)) {
    d = margin.value_or(0.5);
    c = left + d;
  } else {
    const double gap = right - left;
    d = margin.value_or(std::min(0.5, 0.5 * gap));
    if (!(d > 0.0 && d < gap)) throw std::invalid_argument("meijer_g: contour margin outside the pole gap");
    c = right - d;
  }
  if (!(d > 0.0)) throw std::invalid_argument("meijer_g: contour margin must be > 0");

  double rho = 0.0;
  for (int j = 0; j < p.q(); ++j) {
    const double bj = p.b[static_cast<std::size_t>(j)];
    rho += j < p.m ? (bj - c - 0.5) : -(1.0 - bj + c - 0.5);
  }
  for (int k = 0; k < p.p(); ++k) {
    const double ak = p.a[static_cast<std::size_t>(k)];
    rho += k < p.n ? (1.0 - ak + c - 0.5) : -(ak - c - 0.5);
  }
  const double delta = p.m + p.n - 0.5 * (p.p() + p.q());
  return {c, d, delta * std::numbers::pi, rho};
}

// Integrand Phi(c + i t) z^{c + i t}; zero where a denominator Gamma has a pole.
cd mb_integrand(const MeijerParams& p, double log_z, cd s) {
  cd acc = s * log_z;
  for (int j = 0; j < p.q(); ++j) {
    const double bj = p.b[static_cast<std::size_t>(j)];
    if (j < p.m) {
      acc += log_gamma(bj - s);
    } else {
      const cd arg = 1.0 - bj + s;
      if (is_nonpositive_integer(arg)) return 0.0;
      acc -= log_gamma(arg);
    }
  }
  for (int k = 0; k < p.p(); ++k) {
    const double ak = p.a[static_cast<std::size_t>(k)];
    if (k < p.n) {
      acc += log_gamma(1.0 - ak + s);
    } else {
      const cd arg = ak - s;
      if (is_nonpositive_integer(arg)) return 0.0;
      acc -= log_gamma(arg);
    }
  }
  return std::exp(acc);
}

}  // namespace

double meijer_g(const MeijerParams& params, double z, const QuadratureSpec& spec,
                std::optional<double> contour_margin) {
  params.validate();
  spec.validate();
  if (!(z > 0.0) || !std::isfinite(z)) throw std::domain_error("meijer_g: z must be finite and > 0");

  const Contour line = choose_contour(params, contour_margin);
  const double log_z = std::log(z);
  auto f = [&](double t) { return mb_integrand(params, log_z, cd(line.c, t)).real(); };

  // Phi(conj s) = conj Phi(s) for real parameters and z > 0, so
  // G = (1/pi) \int_0^inf Re Phi(c + i t) dt.
  double h = 0.25;
  const double t_floor = std::max(2.0, 2.0 * line.exponent / line.decay);
  constexpr double t_cap = 400.0;

  std::vector<double> samples;  // f(k h) for the coarsest step
  samples.push_back(f(0.0));
  double peak = std::abs(samples.front());
  double height = 0.0;
  for (int k = 1;; ++k) {
    const double t = k * h;
    const cd val = mb_integrand(params, log_z, cd(line.c, t));
    const double v = std::abs(val);
    samples.push_back(val.real());
    peak = std::max(peak, v);
    // Past t_floor |Phi| decays monotonically like e^{-decay t}; the tail
    // beyond t is below v / decay.
    const double tail = v / line.decay;
    if (t >= t_floor && tail < 1e-3 * spec.abs_tol && tail < 1e-17 * peak) {
      height = t;
      break;
    }
    if (t > t_cap) {
      std::ostringstream os;
      os << "meijer_g: contour tail did not decay by |Im s| = " << t_cap << " (z=" << z
         << ", c=" << line.c << ", |Phi|=" << v << ")";
      throw ConvergenceError(os.str());
    }
  }

  double sum = 0.5 * samples.front();
  for (std::size_t k = 1; k < samples.size(); ++k) sum += samples[k];
  double estimate = h * sum / std::numbers::pi;

  const int steps = static_cast<int>(samples.size()) - 1;
  for (int level = 1; level <= 10; ++level) {
    const double fine_h = h / 2.0;
    double mid_sum = 0.0;
    const int count = steps << (level - 1);
    for (int k = 0; k < count; ++k) mid_sum += f((2 * k + 1) * fine_h);
    sum += mid_sum;
    h = fine_h;
    const double refined = h * sum / std::numbers::pi;
    const double change = std::abs(refined - estimate);
    estimate = refined;
    if (level >= 2 && change <= std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate))) return estimate;
  }
  std::ostringstream os;
  os.precision(6);
  os << "meijer_g: step refinement did not converge (z=" << z << ", c=" << line.c << ", T=" << height
     << ", h=" << h << ", value=" << estimate << ")";
  throw ConvergenceError(os.str());
}

double calG(double z, double a, const QuadratureSpec& spec) {
  return meijer_g({3, 0, {0.0}, {-1.0, -a, -2.0}}, z, spec);
}

double calI(int a, int alpha, double gamma, double x, const QuadratureSpec& spec) {
  if (a != 0 && a != 2) throw std::invalid_argument("calI: a must be 0 or 2");
  if (alpha < -1 || alpha > 3) throw std::invalid_argument("calI: alpha must lie in [-1, 3]");
  if (!(gamma > 0.0) || !(x > 0.0)) throw std::domain_error("calI: gamma and x must be > 0");

  const double b2 = alpha + a - 2.0;
  const double g_term = std::pow(x, 2.0 - a) / (2.0 * std::pow(gamma, b2)) *
                        meijer_g({3, 0, {0.0}, {-1.0, b2, a - 2.0}}, gamma * x, spec);

  const double half_alpha = 0.5 * alpha;
  const double gx = gamma * x;
  auto integrand = [&](double u) {
    const double t = 1.0 + u * u;
    const double arg = 2.0 * std::sqrt(gx * t);
    if (arg > 700.0) return 0.0;
    // dt / sqrt(t - 1) = 2 du
    return 2.0 * std::pow(t, a + half_alpha - 2.0) * (2.0 - t) * bessel_k(alpha, arg) *
           std::asin(1.0 / std::sqrt(t));
  };
  const double tail = std::pow(x / gamma, half_alpha) *
                      integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), spec);
  return g_term + tail;
}

}  // namespace ristile
