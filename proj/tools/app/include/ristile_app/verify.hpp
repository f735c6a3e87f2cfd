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

// Acceptance suite shared by `ristile verify` and the acceptance test.

#ifndef RISTILE_APP_VERIFY_HPP
#define RISTILE_APP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace ristile::app {

enum class VerifyLevel { smoke, full };

VerifyLevel parse_level(const std::string& s);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::full;
  std::uint64_t seed = 20260415;
  unsigned workers = 0;
  std::set<int> only;  // empty: every criterion
  // Negative control: replaces the analytic SNR gain under test.
  std::optional<double> injected_gain;
};

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  std::string tolerance;
  bool passed = false;
  bool advisory = false;  // reported, never fails the criterion
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  bool passed() const;
};

struct VerifyReport {
  std::vector<CriterionReport> criteria;
  bool passed() const;
};

/// Progress lines go to `log` when non-null.
VerifyReport run_verify(const VerifyOptions& options, std::ostream* log = nullptr);

/// One "criterion N: PASS|FAIL" line per criterion; per-check detail when
/// `detailed` is set.
void print_report(const VerifyReport& report, std::ostream& os, bool detailed);

}  // namespace ristile::app

#endif
