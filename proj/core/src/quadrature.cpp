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

#include "ristile/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ristile/errors.hpp"

namespace ristile {

namespace {

// Kronrod 15-point abscissae (descending) and weights; odd-indexed nodes
// are shared with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

class NonFiniteIntegrand : public std::runtime_error {
 public:
  explicit NonFiniteIntegrand(double x)
      : std::runtime_error("integrand returned a non-finite value"), at(x) {}
  double at;
};

double eval(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw NonFiniteIntegrand(x);
  return y;
}

// QUADPACK qk15 with its error heuristics.
Segment gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = eval(f, center);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::abs(res_k);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = eval(f, center - dx);
    fv2[j] = eval(f, center + dx);
    const double sum = fv1[j] + fv2[j];
    res_k += kWgk[j] * sum;
    res_abs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) res_g += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * res_k;
  double res_asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) res_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

  const double result = res_k * half;
  res_abs *= std::abs(half);
  res_asc *= std::abs(half);
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * res_abs, err);
  return {a, b, result, err};
}

QuadratureResult adapt(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  QuadratureResult r;
  r.evaluations = 15;
  double total = first.value;
  double total_err = first.error;
  // Segments too narrow to split further; their error is final.
  double frozen_err = 0.0;
  double frozen_val = 0.0;

  auto tolerance = [&](double value) { return std::max(spec.abs_tol, spec.rel_tol * std::abs(value)); };

  while (total_err > tolerance(total) && r.subdivisions < spec.max_subdivisions && !heap.empty()) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const double width = std::abs(worst.b - worst.a);
    const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
    if (width <= 1e3 * std::numeric_limits<double>::epsilon() * scale || mid == worst.a ||
        mid == worst.b) {
      frozen_err += worst.error;
      frozen_val += worst.value;
      continue;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    r.evaluations += 30;
    ++r.subdivisions;
    heap.push(left);
    heap.push(right);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
  }

  // Re-sum from the segments to avoid drift from incremental updates.
  double value = frozen_val;
  double err = frozen_err;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  r.value = value;
  r.abs_error = err;
  r.converged = err <= tolerance(value);
  return r;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
  if (max_subdivisions < 1) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (std::isnan(a) || std::isnan(b) || std::isinf(a))
    throw std::invalid_argument("integrate_adaptive: lower limit must be finite");
  if (a == b) return {0.0, 0.0, 0, 0, true};
  try {
    if (std::isinf(b)) {
      if (b < 0) throw std::invalid_argument("integrate_adaptive: upper limit -inf unsupported");
      const Integrand mapped = [&f, a](double t) {
        const double one_minus = 1.0 - t;
        const double x = a + t / one_minus;
        if (std::isinf(x)) return 0.0;
        return f(x) / (one_minus * one_minus);
      };
      return adapt(mapped, 0.0, 1.0, spec);
    }
    return adapt(f, a, b, spec);
  } catch (const NonFiniteIntegrand& e) {
    std::ostringstream os;
    os.precision(17);
    os << "adaptive quadrature on [" << a << ", " << b << "]: non-finite integrand near mapped point "
       << e.at;
    throw ConvergenceError(os.str());
  }
}

double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  const QuadratureResult r = integrate_adaptive(f, a, b, spec);
  if (!r.converged) {
    std::ostringstream os;
    os.precision(6);
    os << "adaptive quadrature on [" << a << ", " << b << "] did not converge: value=" << r.value
       << " est_error=" << r.abs_error << " abs_tol=" << spec.abs_tol << " rel_tol=" << spec.rel_tol
       << " subdivisions=" << r.subdivisions << "/" << spec.max_subdivisions;
    throw ConvergenceError(os.str());
  }
  return r.value;
}

}  // namespace ristile
