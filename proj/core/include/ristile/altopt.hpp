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

// Alternating maximization of |b^dagger G Phi H a|^2 over unit a, b and the
// two tile phases. Each half-step is an exact argmax, so the objective never
// decreases; the result is a local optimum, not a certified global one.

#ifndef RISTILE_ALTOPT_HPP
#define RISTILE_ALTOPT_HPP

#include <cstdint>
#include <vector>

#include "ristile/complex2.hpp"
#include "ristile/montecarlo.hpp"
#include "ristile/sampling.hpp"
#include "ristile/sysmodel.hpp"

namespace ristile {

struct AltOptResult {
  ComplexVec2 a;
  ComplexVec2 b;
  PhaseConfig phi;
  double gamma_alt = 0.0;
  int iterations = 0;          // completed (A, B) cycles
  std::vector<double> trace;   // trace[0] is the warm start, then one entry per cycle
  bool converged = false;
};

struct AltOptSettings {
  double tol = 1e-10;  // relative improvement threshold
  int max_iter = 200;
  bool keep_trace = true;
};

/// Warm start from the compensated phases of mode (1, 1).
AltOptResult optimize_joint(const ChannelRealization& ch, double gamma_bar, double tol = 1e-10,
                            int max_iter = 200);

/// Same iteration from an arbitrary initial phase pair. trace[0] is then the
/// SNR of that Phi with its own best (a, b).
AltOptResult optimize_joint_from(const ChannelRealization& ch, double gamma_bar,
                                 const PhaseConfig& start, const AltOptSettings& settings = {});

/// Phases maximizing |b^dagger G Phi H a| for fixed a, b. A zero product
/// leaves that phase at 0.
PhaseConfig best_phases(const ComplexMat2& g, const ComplexMat2& h, const ComplexVec2& a,
                        const ComplexVec2& b);

McEstimate alt_outage_mc(double gamma_bar, double gamma_th, std::uint64_t trials, std::uint64_t seed,
                         const McOptions& options = {});
McEstimate alt_throughput_mc(double gamma_bar, std::uint64_t trials, std::uint64_t seed,
                             const McOptions& options = {});

}  // namespace ristile

#endif
