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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "ristile_app/experiment.hpp"
#include "ristile_app/verify.hpp"

using namespace ristile;
using namespace ristile::app;

TEST_CASE("default grid has 31 points") {
  ExperimentConfig c;
  CHECK(c.grid().size() == 31);
  CHECK(c.grid().front() == -5.0);
  CHECK(c.grid().back() == 25.0);
  c.snr_db_step = 0.1;
  CHECK(c.grid().size() == 301);
  CHECK(c.schemes.size() == 9);
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  CHECK_NOTHROW(c.validate());
  c.snr_db_min = 30;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.snr_db_step = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.trials = 99;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.schemes.clear();
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("key=value config parsing and precedence") {
  std::istringstream in(
      "# figure-1 run\n"
      "snr_db_min = 0\n"
      "snr_db_max=10   # inclusive\n"
      "trials = 500\n"
      "schemes = j1i1, j1i1-cmp ,alt\n"
      "svg = true\n");
  ExperimentConfig c;
  parse_config(in).apply(c);
  CHECK(c.snr_db_min == 0.0);
  CHECK(c.snr_db_max == 10.0);
  CHECK(c.trials == 500);
  CHECK(c.emit_svg);
  REQUIRE(c.schemes.size() == 3);
  CHECK(c.schemes[1].name() == "j1i1-cmp");
  // flags override the file
  ConfigOverrides flags;
  flags.trials = 700;
  flags.apply(c);
  CHECK(c.trials == 700);
  CHECK(c.snr_db_max == 10.0);

  std::istringstream bad_key("foo = 1\n");
  CHECK_THROWS_AS(parse_config(bad_key), std::invalid_argument);
  std::istringstream bad_num("trials = ten\n");
  CHECK_THROWS_AS(parse_config(bad_num), std::invalid_argument);
  std::istringstream no_eq("trials 10\n");
  CHECK_THROWS_AS(parse_config(no_eq), std::invalid_argument);
  std::istringstream bad_scheme("schemes = j9i9\n");
  CHECK_THROWS_AS(parse_config(bad_scheme).apply(c), std::invalid_argument);
}

TEST_CASE("CSV schema and determinism") {
  ExperimentConfig c;
  c.snr_db_min = 0;
  c.snr_db_max = 10;
  c.snr_db_step = 5;
  c.trials = 2000;
  c.schemes = parse_scheme_list("j2i2,alt");
  const auto rows = run_experiment(c, Metric::outage);
  REQUIRE(rows.size() == 3 * 2);
  std::ostringstream a, b;
  write_csv(rows, a);
  write_csv(run_experiment(c, Metric::outage), b);
  CHECK(a.str() == b.str());
  std::istringstream lines(a.str());
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == "snr_db,scheme,analytic,mc,ci95");
  CHECK(first.rfind("0,j2i2,", 0) == 0);
  CHECK(second.rfind("0,alt,,", 0) == 0);
  CHECK(a.str().find('\r') == std::string::npos);
  CHECK(a.str().back() == '\n');
}

TEST_CASE("throughput rows carry analytic values for fixed modes") {
  ExperimentConfig c;
  c.snr_db_min = c.snr_db_max = 10;
  c.trials = 1000;
  c.schemes = parse_scheme_list("j2i2,j2i2-cmp,alt");
  const auto rows = run_experiment(c, Metric::throughput);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].analytic.has_value());
  CHECK(*rows[1].analytic > *rows[0].analytic);
  CHECK_FALSE(rows[2].analytic.has_value());
}

TEST_CASE("SVG rendering") {
  std::vector<ResultRow> rows{{0, "j1i1", 0.5, 0.51, 0.01},
                              {5, "j1i1", 0.1, 0.11, 0.01},
                              {0, "alt", std::nullopt, 0.3, 0.01},
                              {5, "alt", std::nullopt, 0.0, 0.0}};
  std::ostringstream os;
  write_svg(rows, Metric::outage, os);
  const std::string s = os.str();
  CHECK(s.rfind("<?xml", 0) == 0);
  CHECK(s.find("version=\"1.1\"") != std::string::npos);
  CHECK(s.find("stroke-dasharray") != std::string::npos);
  CHECK(s.find(">alt<") != std::string::npos);
  CHECK(s.find("nan") == std::string::npos);
  CHECK(s.find("inf") == std::string::npos);
  CHECK(svg_path_for("out/fig1.csv") == "out/fig1.svg");
  CHECK(svg_path_for("a.b/fig") == "a.b/fig.svg");
}

TEST_CASE("verify negative control fails") {
  VerifyOptions o;
  o.level = VerifyLevel::smoke;
  o.only = {1};
  CHECK(run_verify(o).passed());
  o.injected_gain = std::pow(10.0, 0.2);
  const VerifyReport r = run_verify(o);
  REQUIRE(r.criteria.size() == 1);
  CHECK_FALSE(r.passed());
  std::ostringstream os;
  print_report(r, os, false);
  CHECK(os.str().find("criterion  1: FAIL") != std::string::npos);
}

TEST_CASE("verify level parsing") {
  CHECK(parse_level("smoke") == VerifyLevel::smoke);
  CHECK(parse_level("full") == VerifyLevel::full);
  CHECK_THROWS_AS(parse_level("fast"), std::invalid_argument);
}
