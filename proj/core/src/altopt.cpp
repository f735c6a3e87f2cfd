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

#include "ristile/altopt.hpp"

#include <cmath>
#include <stdexcept>

namespace ristile {

namespace {

double objective(const ComplexMat2& g, const ComplexMat2& h, const PhaseConfig& phi, const ComplexVec2& a,
                 const ComplexVec2& b, double gamma_bar) {
  return gamma_bar * std::norm(dot(b, g * (phi.matrix() * (h * a))));
}

void check_args(double gamma_bar, double tol, int max_iter) {
  if (!(gamma_bar > 0.0)) throw std::invalid_argument("optimize_joint: gamma_bar must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("optimize_joint: tol must be > 0");
  if (max_iter < 1) throw std::invalid_argument("optimize_joint: max_iter must be >= 1");
}

// Runs (A, B) cycles starting from the given state; trace must hold the
// starting objective.
void iterate(const ChannelRealization& ch, double gamma_bar, const AltOptSettings& s, AltOptResult& r) {
  double prev = r.gamma_alt;
  for (int k = 0; k < s.max_iter; ++k) {
    // A: best (a, b) for fixed Phi.
    const Svd2 d = svd2(ch.g * r.phi.matrix() * ch.h);
    r.a = d.v.col(0);
    r.b = d.u.col(0);
    // B: best Phi for fixed (a, b).
    r.phi = best_phases(ch.g, ch.h, r.a, r.b);
    const double cur = objective(ch.g, ch.h, r.phi, r.a, r.b, gamma_bar);
    ++r.iterations;
    r.gamma_alt = cur;
    if (s.keep_trace) r.trace.push_back(cur);
    if (cur - prev <= s.tol * prev) {
      r.converged = true;
      return;
    }
    prev = cur;
  }
}

}  // namespace

PhaseConfig best_phases(const ComplexMat2& g, const ComplexMat2& h, const ComplexVec2& a,
                        const ComplexVec2& b) {
  const ComplexVec2 gb = g.adjoint() * b;
  const ComplexVec2 ha = h * a;
  PhaseConfig p;
  double* out[2] = {&p.phi1, &p.phi2};
  for (int k = 0; k < 2; ++k) {
    const Complex prod = std::conj(gb[k]) * ha[k];
    *out[k] = std::abs(prod) > 0.0 ? wrap_pi(-std::arg(prod)) : 0.0;
  }
  return p;
}

AltOptResult optimize_joint(const ChannelRealization& ch, double gamma_bar, double tol, int max_iter) {
  check_args(gamma_bar, tol, max_iter);
  const Mode top{1, 1, true};
  const ModeVectors mv = mode_vectors(ch, top);
  AltOptResult r;
  r.a = mv.a;
  r.b = mv.b;
  r.phi = mode_phases(ch, top);
  r.gamma_alt = objective(ch.g, ch.h, r.phi, r.a, r.b, gamma_bar);
  r.trace.push_back(r.gamma_alt);
  iterate(ch, gamma_bar, {tol, max_iter, true}, r);
  return r;
}

AltOptResult optimize_joint_from(const ChannelRealization& ch, double gamma_bar, const PhaseConfig& start,
                                 const AltOptSettings& settings) {
  check_args(gamma_bar, settings.tol, settings.max_iter);
  AltOptResult r;
  r.phi = start;
  const Svd2 d = svd2(ch.g * start.matrix() * ch.h);
  r.a = d.v.col(0);
  r.b = d.u.col(0);
  r.gamma_alt = objective(ch.g, ch.h, r.phi, r.a, r.b, gamma_bar);
  if (settings.keep_trace) r.trace.push_back(r.gamma_alt);
  iterate(ch, gamma_bar, settings, r);
  return r;
}

McEstimate alt_outage_mc(double gamma_bar, double gamma_th, std::uint64_t trials, std::uint64_t seed,
                         const McOptions& options) {
  McEstimate e = outage_from_gains(sample_gains({Scheme::alt()}, trials, seed, options).column(0), gamma_bar, gamma_th);
  e.seed = seed;
  return e;
}

McEstimate alt_throughput_mc(double gamma_bar, std::uint64_t trials, std::uint64_t seed,
                             const McOptions& options) {
  McEstimate e = throughput_from_gains(sample_gains({Scheme::alt()}, trials, seed, options).column(0), gamma_bar);
  e.seed = seed;
  return e;
}

}  // namespace ristile
