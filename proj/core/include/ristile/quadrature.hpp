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

#ifndef RISTILE_QUADRATURE_HPP
#define RISTILE_QUADRATURE_HPP

#include <functional>

namespace ristile {

/// Tolerances and budget for adaptive integration. An integral is accepted
/// once its error estimate is below max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Global adaptive Gauss-Kronrod (7/15) on [a, b]. b may be +infinity, in
/// which case x = a + t/(1 - t) maps the range onto [0, 1). Does not
/// throw on non-convergence; check `converged`.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec = {});

/// As integrate_adaptive but throws ConvergenceError (with diagnostics)
/// when the tolerance is not met.
double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

}  // namespace ristile

#endif
