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

#ifndef RISTILE_SYSMODEL_HPP
#define RISTILE_SYSMODEL_HPP

#include <string>

#include "ristile/complex2.hpp"
#include "ristile/sampling.hpp"

namespace ristile {

// Signal model: y = G Phi H a s + n with x = a s rank one, b the combiner.
// Noise is never instantiated; only gamma_bar = rho_s / sigma^2 enters the
// SNR gamma = gamma_bar |b^dagger G Phi H a|^2.

/// Constant phases of the two RIS tiles, each in [-pi, pi).
struct PhaseConfig {
  // radians, kept in [-pi, pi) by every producer in this library
  double phi1 = 0.0;
  double phi2 = 0.0;

  /// diag(e^{j phi1}, e^{j phi2})
  ComplexMat2 matrix() const;
};

/// Transmission strategy: transmit along q_i (right singular vector i of H),
/// combine along u_j (left singular vector j of G), optionally with the RIS
/// phases matched to v_j and w_i.
struct Mode {
  int tx_index = 1;  // i
  int rx_index = 1;  // j
  bool compensated = false;

  void validate() const;

  /// "j<j>i<i>" with a "-cmp" suffix when compensated, e.g. "j1i2-cmp".
  std::string name() const;

  friend bool operator==(const Mode&, const Mode&) = default;
};

struct SnrSample {
  double gamma = 0.0;     // linear SNR
  double lambda_j = 0.0;  // sigma_j(G)^2
  double omega_i = 0.0;   // sigma_i(H)^2
  double z = 0.0;         // |v_j^dagger Phi w_i|^2, in [0, 1]
};

struct ModeVectors {
  ComplexVec2 a;  // transmit direction q_i
  ComplexVec2 b;  // combiner u_j
};

ModeVectors mode_vectors(const ChannelRealization& ch, const Mode& m);

/// phi_k = -arg(conj(v_jk) w_ik), wrapped to [-pi, pi). With these phases
/// |v_j^dagger Phi w_i| = |v_j1||w_i1| + |v_j2||w_i2|. A product with
/// modulus below 1e-300 leaves its phase at 0.
PhaseConfig compensated_phases(const ComplexVec2& v_j, const ComplexVec2& w_i);

/// (|v_j1||w_i1| + |v_j2||w_i2|)^2
double compensated_z(const ComplexVec2& v_j, const ComplexVec2& w_i);

/// gamma_bar |b^dagger G Phi H a|^2. Throws std::invalid_argument when a or
/// b is not unit-norm within 1e-10 or gamma_bar is not positive.
double instantaneous_snr(const ComplexMat2& g, const ComplexMat2& h, const PhaseConfig& phi,
                         const ComplexVec2& a, const ComplexVec2& b, double gamma_bar);

/// SNR of mode m on this channel. Uncompensated modes use the fixed
/// `reference` phases (identity by default); compensated modes use
/// compensated_phases(v_j, w_i).
SnrSample mode_snr(const ChannelRealization& ch, const Mode& m, double gamma_bar,
                   const PhaseConfig& reference = {});

/// The RIS phases that mode_snr applies for mode m.
PhaseConfig mode_phases(const ChannelRealization& ch, const Mode& m,
                        const PhaseConfig& reference = {});

}  // namespace ristile

#endif
