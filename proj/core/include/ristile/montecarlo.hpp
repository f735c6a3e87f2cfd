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

// Monte Carlo harness. Trial t of a run draws its channel from the Philox
// stream keyed by (seed, stream, t) and nothing else, so results do not
// depend on how trials are spread over threads. Schemes are evaluated at
// gamma_bar = 1; an SNR grid is then a rescaling of the same draws.

#ifndef RISTILE_MONTECARLO_HPP
#define RISTILE_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ristile/sysmodel.hpp"

namespace ristile {

struct McEstimate {
  double value = 0.0;
  double ci_half_width = 0.0;  // 95%
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

class Scheme {
 public:
  enum class Kind { mode, alt };

  Scheme() = default;
  static Scheme of(const Mode& m);
  static Scheme alt();
  /// "j{1|2}i{1|2}[-cmp]" or "alt"; throws std::invalid_argument otherwise.
  static Scheme parse(std::string_view name);

  Kind kind() const { return kind_; }
  const Mode& mode() const { return mode_; }
  bool is_alt() const { return kind_ == Kind::alt; }
  std::string name() const;

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  Kind kind_ = Kind::mode;
  Mode mode_{};
};

/// The eight fixed modes (uncompensated then compensated, j1i1 first)
/// followed by alt.
std::vector<Scheme> all_schemes();

struct McOptions {
  unsigned workers = 0;      // 0: std::thread::hardware_concurrency()
  std::uint64_t stream = 0;  // independent sub-stream selector, < 2^32
  bool alt_random_start = false;
  double alt_tol = 1e-10;
  int alt_max_iter = 200;
};

/// gains[s * trials + t] = SNR of scheme s on trial t at gamma_bar = 1.
struct GainTable {
  std::vector<Scheme> schemes;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> gains;

  std::span<const double> column(std::size_t s) const;
};

GainTable sample_gains(const std::vector<Scheme>& schemes, std::uint64_t trials, std::uint64_t seed,
                       const McOptions& options = {});

/// Per-trial draws backing the eigenvalue and Z laws. z and z_cmp are the
/// mode (1, 1) factors of the same channel.
struct ChannelSamples {
  std::vector<double> lambda1, lambda2;
  std::vector<double> z, z_cmp;
};
ChannelSamples sample_channel_stats(std::uint64_t trials, std::uint64_t seed, const McOptions& options = {});

/// Z and Z_cmp for the first columns of two independent Haar unitaries.
struct HaarZSamples {
  std::vector<double> z, z_cmp;
};
HaarZSamples sample_haar_z(std::uint64_t trials, std::uint64_t seed, const McOptions& options = {});

/// Runs body(begin, end) over [0, n) split into contiguous chunks.
void parallel_for(std::uint64_t n, unsigned workers,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body);

/// Pairwise (cascade) summation; fixed association order for a given length.
double pairwise_sum(std::span<const double> x);

/// Proportion k/n with its 95% Wilson half-width.
McEstimate wilson_estimate(std::uint64_t successes, std::uint64_t n);

/// Fraction of gamma_bar * g <= gamma_th.
McEstimate outage_from_gains(std::span<const double> g, double gamma_bar, double gamma_th);
/// Mean of ln(1 + gamma_bar * g) with a 1.96 s / sqrt(n) half-width.
McEstimate throughput_from_gains(std::span<const double> g, double gamma_bar);
/// Mean of g with a 1.96 s / sqrt(n) half-width.
McEstimate mean_estimate(std::span<const double> g);
/// mean(num) / mean(den) over paired samples; delta-method 95% half-width.
McEstimate ratio_estimate(std::span<const double> num, std::span<const double> den);

McEstimate estimate_outage(const Scheme& s, double gamma_bar, double gamma_th, std::uint64_t trials,
                           std::uint64_t seed, const McOptions& options = {});
McEstimate estimate_throughput(const Scheme& s, double gamma_bar, std::uint64_t trials, std::uint64_t seed,
                               const McOptions& options = {});

class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  /// Fraction of samples <= x.
  double operator()(double x) const;
  /// sup_x |F_n(x) - F(x)| for a continuous reference F.
  double ks_distance(const std::function<double(double)>& reference) const;
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

}  // namespace ristile

#endif
