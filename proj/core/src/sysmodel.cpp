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

#include "ristile/sysmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace ristile {

namespace {

constexpr double kUnitNormTol = 1e-10;

void require_unit(const ComplexVec2& v, const char* what) {
  if (!(std::abs(v.norm() - 1.0) <= kUnitNormTol))
    throw std::invalid_argument(std::string("instantaneous_snr: ") + what + " must be unit norm");
}

}  // namespace

ComplexMat2 PhaseConfig::matrix() const {
  return ComplexMat2::diag(std::polar(1.0, phi1), std::polar(1.0, phi2));
}

void Mode::validate() const {
  if ((tx_index != 1 && tx_index != 2) || (rx_index != 1 && rx_index != 2))
    throw std::invalid_argument("Mode indices must be 1 or 2");
}

std::string Mode::name() const {
  std::string s = "j" + std::to_string(rx_index) + "i" + std::to_string(tx_index);
  if (compensated) s += "-cmp";
  return s;
}

ModeVectors mode_vectors(const ChannelRealization& ch, const Mode& m) {
  m.validate();
  return {ch.svd_h.v.col(m.tx_index - 1), ch.svd_g.u.col(m.rx_index - 1)};
}

PhaseConfig compensated_phases(const ComplexVec2& v_j, const ComplexVec2& w_i) {
  auto phase = [](Complex p) { return std::abs(p) < 1e-300 ? 0.0 : wrap_pi(-std::arg(p)); };
  return {phase(std::conj(v_j[0]) * w_i[0]), phase(std::conj(v_j[1]) * w_i[1])};
}

double compensated_z(const ComplexVec2& v_j, const ComplexVec2& w_i) {
  const double s = std::abs(v_j[0]) * std::abs(w_i[0]) + std::abs(v_j[1]) * std::abs(w_i[1]);
  return s * s;
}

double instantaneous_snr(const ComplexMat2& g, const ComplexMat2& h, const PhaseConfig& phi,
                         const ComplexVec2& a, const ComplexVec2& b, double gamma_bar) {
  if (!(gamma_bar > 0.0)) throw std::invalid_argument("instantaneous_snr: gamma_bar must be > 0");
  require_unit(a, "a");
  require_unit(b, "b");
  const ComplexVec2 y = g * (phi.matrix() * (h * a));
  return gamma_bar * std::norm(dot(b, y));
}

PhaseConfig mode_phases(const ChannelRealization& ch, const Mode& m, const PhaseConfig& reference) {
  m.validate();
  if (!m.compensated) return reference;
  return compensated_phases(ch.svd_g.v.col(m.rx_index - 1), ch.svd_h.u.col(m.tx_index - 1));
}

SnrSample mode_snr(const ChannelRealization& ch, const Mode& m, double gamma_bar,
                   const PhaseConfig& reference) {
  m.validate();
  const ComplexVec2 v_j = ch.svd_g.v.col(m.rx_index - 1);
  const ComplexVec2 w_i = ch.svd_h.u.col(m.tx_index - 1);

  SnrSample out;
  out.lambda_j = ch.lambda(m.rx_index);
  out.omega_i = ch.omega(m.tx_index);
  if (m.compensated) {
    out.z = compensated_z(v_j, w_i);
  } else {
    out.z = std::norm(dot(v_j, reference.matrix() * w_i));
  }
  out.gamma = gamma_bar * out.lambda_j * out.omega_i * out.z;
  return out;
}

}  // namespace ristile
