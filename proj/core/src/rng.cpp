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

#include "ristile/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ristile {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline PhiloxCounter philox_round(const PhiloxCounter& c, const PhiloxKey& k) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, c[0], hi0, lo0);
  mulhilo(kPhiloxM1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  ctr = philox_round(ctr, key);
  for (int r = 1; r < 10; ++r) {
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
    ctr = philox_round(ctr, key);
  }
  return ctr;
}

CounterRng::CounterRng(RngState state, std::uint64_t trial)
    : key_{static_cast<std::uint32_t>(state.seed), static_cast<std::uint32_t>(state.seed >> 32)},
      stream_(static_cast<std::uint32_t>(state.stream)),
      trial_(trial) {
  if (state.stream > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("CounterRng: stream id must fit in 32 bits");
}

void CounterRng::refill() {
  const PhiloxCounter ctr{block_, stream_, static_cast<std::uint32_t>(trial_),
                          static_cast<std::uint32_t>(trial_ >> 32)};
  buffer_ = philox4x32_10(ctr, key_);
  ++block_;
  buffered_ = 2;
}

double CounterRng::uniform() {
  if (buffered_ == 0) refill();
  const int base = 2 * (2 - buffered_);
  --buffered_;
  const std::uint64_t hi = buffer_[static_cast<std::size_t>(base)] >> 5;      // 27 bits
  const std::uint64_t lo = buffer_[static_cast<std::size_t>(base) + 1] >> 6;  // 26 bits
  const std::uint64_t bits = (hi << 26) | lo;
  return (static_cast<double>(bits) + 0.5) * 0x1p-53;
}

double CounterRng::normal() {
  if (have_spare_normal_) {
    have_spare_normal_ = false;
    return spare_normal_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double t = 2.0 * std::numbers::pi * uniform();
  spare_normal_ = r * std::sin(t);
  have_spare_normal_ = true;
  return r * std::cos(t);
}

std::complex<double> CounterRng::complex_normal() {
  // sqrt(-2 ln u) * sqrt(1/2) = sqrt(-ln u)
  const double r = std::sqrt(-std::log(uniform()));
  const double t = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, t);
}

}  // namespace ristile
