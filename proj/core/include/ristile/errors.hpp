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

#ifndef RISTILE_ERRORS_HPP
#define RISTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ristile {

/// Raised when an iterative numerical routine (adaptive quadrature,
/// Mellin-Barnes contour sum) exhausts its budget before meeting tolerance.
/// The message carries the diagnostics needed to reproduce the failure.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ristile

#endif
