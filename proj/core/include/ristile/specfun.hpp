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

#ifndef RISTILE_SPECFUN_HPP
#define RISTILE_SPECFUN_HPP

#include <complex>
#include <optional>
#include <vector>

#include "ristile/quadrature.hpp"

namespace ristile {

/// log Gamma(w) for complex w away from the poles. Only the real part is
/// branch-independent; the imaginary part is some branch of arg Gamma(w),
/// which is all that exp(log_gamma(w)) needs. Throws std::domain_error at
/// the poles w = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> w);

/// Modified Bessel function of the second kind K_n(x), integer |n| <= 3,
/// x > 0. K_{-n} = K_n. Throws std::domain_error for x <= 0.
double bessel_k(int order, double x);

/// Parameters of G^{m,n}_{p,q}(z | a_1..a_p ; b_1..b_q).
struct MeijerParams {
  int m = 0;
  int n = 0;
  std::vector<double> a;  // length p
  std::vector<double> b;  // length q

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }

  /// Throws std::invalid_argument unless the parameters admit a vertical
  /// Mellin-Barnes contour: m <= q, n <= p, m + n > (p + q) / 2, and the
  /// poles of Gamma(1 - a_k + s) (k <= n) lie strictly left of those of
  /// Gamma(b_j - s) (j <= m).
  void validate() const;
};

/// Meijer G-function for real z > 0 by trapezoidal summation of the
/// Mellin-Barnes integral
///
///   G(z) = (1 / 2 pi i) \int_{c - i inf}^{c + i inf} Phi(s) z^s ds
///
/// along Re s = c, with the truncation height grown until the tail is below
/// tolerance and the step halved until successive sums agree. The line sits
/// `contour_margin` to the left of the leftmost Gamma(b_j - s) pole (default:
/// 0.5, or half the gap to the opposing poles if that is smaller).
/// Coincident b-parameters need no special handling because the line never
/// touches a pole. Throws ConvergenceError with diagnostics on failure.
double meijer_g(const MeijerParams& params, double z, const QuadratureSpec& spec = {},
                std::optional<double> contour_margin = std::nullopt);

/// G^{3,0}_{1,3}(z | 0 ; -1, -a, -2), the kernel of the uncompensated
/// outage expressions.
double calG(double z, double a, const QuadratureSpec& spec = {});

/// The composite integral used by the phase-compensated outage expressions:
///
///   I_a(alpha, gamma, x) = x^{2-a} / (2 gamma^{alpha+a-2})
///                            G^{3,0}_{1,3}(gamma x | 0 ; -1, alpha+a-2, a-2)
///       + (x/gamma)^{alpha/2} \int_1^inf t^{a+alpha/2-2} (2-t)/sqrt(t-1)
///                            K_alpha(2 sqrt(gamma x t)) arcsin(1/sqrt t) dt
///
/// The t-integral is taken in t = 1 + u^2 to remove the endpoint
/// singularity. Supported: a in {0, 2}, alpha in {-1, ..., 3}, gamma > 0,
/// x > 0.
double calI(int a, int alpha, double gamma, double x, const QuadratureSpec& spec = {});

}  // namespace ristile

#endif
