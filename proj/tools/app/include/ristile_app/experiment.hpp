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

#ifndef RISTILE_APP_EXPERIMENT_HPP
#define RISTILE_APP_EXPERIMENT_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ristile/montecarlo.hpp"

namespace ristile::app {

struct ExperimentConfig {
  double snr_db_min = -5.0;
  double snr_db_max = 25.0;
  double snr_db_step = 1.0;
  double threshold_db = 0.0;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes = all_schemes();
  std::string output_path;  // empty: stdout
  bool emit_svg = false;
  unsigned workers = 0;
  bool alt_random_start = false;

  /// Throws std::invalid_argument on a violated invariant.
  void validate() const;
  std::vector<double> grid() const;
};

/// Optional overrides, one per config key; unset fields leave the base alone.
struct ConfigOverrides {
  std::optional<double> snr_db_min, snr_db_max, snr_db_step, threshold_db;
  std::optional<std::uint64_t> trials, seed;
  std::optional<std::string> schemes;  // comma-separated names
  std::optional<std::string> output_path;
  std::optional<bool> emit_svg;
  std::optional<unsigned> workers;
  std::optional<bool> alt_random_start;

  void apply(ExperimentConfig& c) const;
};

/// Parses "key = value" lines; '#' starts a comment. Keys: snr_db_min,
/// snr_db_max, snr_db_step, threshold_db, trials, seed, schemes, out, svg,
/// workers, alt_random_start.
ConfigOverrides parse_config(std::istream& in);
ConfigOverrides load_config_file(const std::string& path);

std::vector<Scheme> parse_scheme_list(const std::string& csv);

struct ResultRow {
  double snr_db = 0.0;
  std::string scheme;
  std::optional<double> analytic;  // absent for alt
  double mc = 0.0;
  double ci95 = 0.0;
};

enum class Metric { outage, throughput };

/// One row per (grid point, scheme), grid-major, schemes in config order.
std::vector<ResultRow> run_experiment(const ExperimentConfig& c, Metric metric);

inline constexpr const char* kCsvHeader = "snr_db,scheme,analytic,mc,ci95";
void write_csv(const std::vector<ResultRow>& rows, std::ostream& os);

/// Static SVG 1.1 chart of the rows: MC solid, analytic dashed.
void write_svg(const std::vector<ResultRow>& rows, Metric metric, std::ostream& os);

std::string svg_path_for(const std::string& csv_path);

}  // namespace ristile::app

#endif
