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

#ifndef RISTILE_RNG_HPP
#define RISTILE_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace ristile {

/// Philox4x32-10 block function (Salmon et al., SC'11).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

/// Identifies an independent random sequence family. Different streams
/// name different experiments sharing one seed.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // must fit in 32 bits
};

/// Counter-based generator for one Monte Carlo trial.
///
/// Every draw is a pure function of (seed, stream, trial, position), so a
/// trial produces the same numbers regardless of which worker runs it or
/// in which order trials are visited. The key is the seed; the 128-bit
/// counter packs (block, stream, trial).
class CounterRng {
 public:
  CounterRng(RngState state, std::uint64_t trial);

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  /// Standard normal via Box-Muller; the sine branch is cached.
  double normal();

  /// Circularly-symmetric CN(0, 1): real and imaginary parts are
  /// independent N(0, 1/2). Consumes exactly two uniforms.
  std::complex<double> complex_normal();

  std::uint32_t blocks_used() const { return block_; }

 private:
  void refill();

  PhiloxKey key_{};
  std::uint32_t stream_ = 0;
  std::uint64_t trial_ = 0;
  std::uint32_t block_ = 0;
  PhiloxCounter buffer_{};
  int buffered_ = 0;  // remaining 64-bit halves in buffer_
  bool have_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace ristile

#endif
