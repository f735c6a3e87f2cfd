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

#ifndef RISTILE_SAMPLING_HPP
#define RISTILE_SAMPLING_HPP

#include "ristile/complex2.hpp"
#include "ristile/rng.hpp"

namespace ristile {

/// One draw of the RIS-to-receiver channel G and the transmitter-to-RIS
/// channel H, with their SVDs cached.
///
///   G = U sqrt(Lambda) V^dagger,  H = W sqrt(Omega) Q^dagger
///
/// so svd_g.u = U, svd_g.v = V, svd_h.u = W, svd_h.v = Q.
struct ChannelRealization {
  ComplexMat2 g;
  ComplexMat2 h;
  Svd2 svd_g;
  Svd2 svd_h;

  static ChannelRealization from_matrices(const ComplexMat2& g, const ComplexMat2& h);

  double lambda(int j) const;  // sigma_j(G)^2, j in {1, 2}
  double omega(int i) const;   // sigma_i(H)^2, i in {1, 2}
};

/// i.i.d. CN(0, 1) entries.
ComplexMat2 sample_gaussian_channel(CounterRng& rng);

/// Draws G then H from the same trial generator.
ChannelRealization sample_channel(CounterRng& rng);

/// Haar-distributed angles: theta12 = arcsin(sqrt(u)) so that its density
/// is sin(2 theta) on [0, pi/2]; the three phases uniform on [0, 2pi).
UnitaryAngles sample_haar_angles(CounterRng& rng);

ComplexMat2 sample_haar_unitary(CounterRng& rng);

/// Density of the difference of two independent Haar theta12 angles,
/// supported on [-pi/2, pi/2]; 0 outside.
double angle_diff_pdf(double x);

/// Density of the sum of two independent Haar theta12 angles, supported on
/// [0, pi]; 0 outside.
double angle_sum_pdf(double x);

}  // namespace ristile

#endif
