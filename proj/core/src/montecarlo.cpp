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

#include "ristile/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "ristile/altopt.hpp"
#include "ristile/rng.hpp"
#include "ristile/sampling.hpp"

namespace ristile {

namespace {

constexpr double kZ95 = 1.959963984540054;

double alt_gain(const ChannelRealization& ch, CounterRng& rng, const McOptions& opt) {
  if (!opt.alt_random_start) return optimize_joint(ch, 1.0, opt.alt_tol, opt.alt_max_iter).gamma_alt;
  PhaseConfig start;
  start.phi1 = wrap_two_pi(2.0 * std::numbers::pi * rng.uniform());
  start.phi2 = wrap_two_pi(2.0 * std::numbers::pi * rng.uniform());
  return optimize_joint_from(ch, 1.0, start, {opt.alt_tol, opt.alt_max_iter, false}).gamma_alt;
}

McEstimate mean_ci(std::span<const double> x) {
  const auto n = x.size();
  if (n == 0) throw std::invalid_argument("mean_ci: no samples");
  McEstimate e;
  e.trials = n;
  e.value = pairwise_sum(x) / static_cast<double>(n);
  if (n < 2) {
    e.ci_half_width = std::numeric_limits<double>::infinity();
    return e;
  }
  std::vector<double> dev(n);
  for (std::size_t i = 0; i < n; ++i) dev[i] = (x[i] - e.value) * (x[i] - e.value);
  const double var = pairwise_sum(dev) / static_cast<double>(n - 1);
  e.ci_half_width = kZ95 * std::sqrt(var / static_cast<double>(n));
  return e;
}

void require_trials(std::uint64_t trials, std::uint64_t minimum) {
  if (trials < minimum) throw std::invalid_argument("Monte Carlo: too few trials");
}

}  // namespace

Scheme Scheme::of(const Mode& m) {
  m.validate();
  Scheme s;
  s.kind_ = Kind::mode;
  s.mode_ = m;
  return s;
}

Scheme Scheme::alt() {
  Scheme s;
  s.kind_ = Kind::alt;
  return s;
}

Scheme Scheme::parse(std::string_view name) {
  if (name == "alt") return alt();
  // j<d>i<d>[-cmp]
  const bool cmp = name.size() == 8 && name.substr(4) == "-cmp";
  if ((name.size() == 4 || cmp) && name[0] == 'j' && name[2] == 'i' && (name[1] == '1' || name[1] == '2') &&
      (name[3] == '1' || name[3] == '2')) {
    return of(Mode{name[3] - '0', name[1] - '0', cmp});
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected j{1|2}i{1|2}[-cmp] or alt)");
}

std::string Scheme::name() const { return is_alt() ? "alt" : mode_.name(); }

std::vector<Scheme> all_schemes() {
  std::vector<Scheme> out;
  for (bool cmp : {false, true})
    for (int j = 1; j <= 2; ++j)
      for (int i = 1; i <= 2; ++i) out.push_back(Scheme::of(Mode{i, j, cmp}));
  out.push_back(Scheme::alt());
  return out;
}

std::span<const double> GainTable::column(std::size_t s) const {
  if (s >= schemes.size()) throw std::out_of_range("GainTable::column");
  return {gains.data() + s * trials, static_cast<std::size_t>(trials)};
}

void parallel_for(std::uint64_t n, unsigned workers,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n, 1)));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::uint64_t chunk = n / workers;
  const std::uint64_t extra = n % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 16) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

McEstimate wilson_estimate(std::uint64_t successes, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("wilson_estimate: n must be > 0");
  if (successes > n) throw std::invalid_argument("wilson_estimate: successes > n");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = kZ95 * kZ95;
  McEstimate e;
  e.value = p;
  e.trials = n;
  e.ci_half_width = kZ95 / (1.0 + z2 / nn) * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return e;
}

McEstimate outage_from_gains(std::span<const double> g, double gamma_bar, double gamma_th) {
  if (!(gamma_bar > 0.0)) throw std::invalid_argument("outage: gamma_bar must be > 0");
  if (!(gamma_th >= 0.0)) throw std::invalid_argument("outage: gamma_th must be >= 0");
  std::uint64_t k = 0;
  for (double v : g) k += (gamma_bar * v <= gamma_th) ? 1 : 0;
  return wilson_estimate(k, g.size());
}

McEstimate throughput_from_gains(std::span<const double> g, double gamma_bar) {
  if (!(gamma_bar > 0.0)) throw std::invalid_argument("throughput: gamma_bar must be > 0");
  std::vector<double> r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = std::log1p(gamma_bar * g[i]);
  return mean_ci(r);
}

McEstimate mean_estimate(std::span<const double> g) { return mean_ci(g); }

McEstimate ratio_estimate(std::span<const double> num, std::span<const double> den) {
  if (num.size() != den.size()) throw std::invalid_argument("ratio_estimate: length mismatch");
  const double n = static_cast<double>(num.size());
  const double a = mean_ci(num).value;
  const double b = mean_ci(den).value;
  const double r = a / b;
  // linearization: r_hat - r ~ mean((num - r den) / b)
  std::vector<double> lin(num.size());
  for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = (num[i] - r * den[i]) / b;
  McEstimate e = mean_ci(lin);
  e.value = r;
  e.trials = static_cast<std::uint64_t>(n);
  return e;
}

GainTable sample_gains(const std::vector<Scheme>& schemes, std::uint64_t trials, std::uint64_t seed,
                       const McOptions& options) {
  require_trials(trials, 1);
  if (schemes.empty()) throw std::invalid_argument("sample_gains: no schemes");
  GainTable t;
  t.schemes = schemes;
  t.trials = trials;
  t.seed = seed;
  t.gains.assign(schemes.size() * trials, 0.0);
  const RngState state{seed, options.stream};
  parallel_for(trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t n = begin; n < end; ++n) {
      CounterRng rng(state, n);
      const ChannelRealization ch = sample_channel(rng);
      for (std::size_t s = 0; s < schemes.size(); ++s) {
        const Scheme& sc = schemes[s];
        t.gains[s * trials + n] = sc.is_alt() ? alt_gain(ch, rng, options) : mode_snr(ch, sc.mode(), 1.0).gamma;
      }
    }
  });
  return t;
}

ChannelSamples sample_channel_stats(std::uint64_t trials, std::uint64_t seed, const McOptions& options) {
  require_trials(trials, 1);
  ChannelSamples out;
  for (auto* v : {&out.lambda1, &out.lambda2, &out.z, &out.z_cmp}) v->assign(trials, 0.0);
  const RngState state{seed, options.stream};
  parallel_for(trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t n = begin; n < end; ++n) {
      CounterRng rng(state, n);
      const ChannelRealization ch = sample_channel(rng);
      out.lambda1[n] = ch.lambda(1);
      out.lambda2[n] = ch.lambda(2);
      const ComplexVec2 v1 = ch.svd_g.v.col(0);
      const ComplexVec2 w1 = ch.svd_h.u.col(0);
      out.z[n] = std::norm(dot(v1, w1));
      out.z_cmp[n] = compensated_z(v1, w1);
    }
  });
  return out;
}

HaarZSamples sample_haar_z(std::uint64_t trials, std::uint64_t seed, const McOptions& options) {
  require_trials(trials, 1);
  HaarZSamples out;
  out.z.assign(trials, 0.0);
  out.z_cmp.assign(trials, 0.0);
  const RngState state{seed, options.stream};
  parallel_for(trials, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t n = begin; n < end; ++n) {
      CounterRng rng(state, n);
      const ComplexVec2 v = sample_haar_unitary(rng).col(0);
      const ComplexVec2 w = sample_haar_unitary(rng).col(0);
      out.z[n] = std::norm(dot(v, w));
      out.z_cmp[n] = compensated_z(v, w);
    }
  });
  return out;
}

McEstimate estimate_outage(const Scheme& s, double gamma_bar, double gamma_th, std::uint64_t trials,
                           std::uint64_t seed, const McOptions& options) {
  require_trials(trials, 100);
  const GainTable t = sample_gains({s}, trials, seed, options);
  McEstimate e = outage_from_gains(t.column(0), gamma_bar, gamma_th);
  e.seed = seed;
  return e;
}

McEstimate estimate_throughput(const Scheme& s, double gamma_bar, std::uint64_t trials, std::uint64_t seed,
                               const McOptions& options) {
  require_trials(trials, 100);
  const GainTable t = sample_gains({s}, trials, seed, options);
  McEstimate e = throughput_from_gains(t.column(0), gamma_bar);
  e.seed = seed;
  return e;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: no samples");
  for (double v : sorted_)
    if (std::isnan(v)) throw std::invalid_argument("EmpiricalCdf: NaN sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::ks_distance(const std::function<double(double)>& reference) const {
  const double n = static_cast<double>(sorted_.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted_.size()) {
    std::size_t j = i;
    while (j + 1 < sorted_.size() && sorted_[j + 1] == sorted_[i]) ++j;
    const double f = reference(sorted_[i]);
    d = std::max({d, static_cast<double>(j + 1) / n - f, f - static_cast<double>(i) / n});
    i = j + 1;
  }
  return d;
}

}  // namespace ristile
