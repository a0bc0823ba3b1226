// Copyright 2026 The eigenfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

namespace eigenfid {

/// Randomized check of the state-level inequality chains on random density
/// matrices:
///   prop1  <phi|rho|phi> <= r(rho), with equality at the top eigenvector
///   prop2  ||rho||_p / d^{1/p} <= r <= ||rho||_p and ||rho||_p^{p/(p-1)} <= r
///   thm1   gamma <= r <= (1 + gamma)/2
struct BoundsCheckOptions {
  int dim = 0;               // 0 cycles d through 2..8
  int trials = 1000;
  int states_per_trial = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
};

struct BoundsCheckReport {
  int trials = 0;
  long prop1_failures = 0;
  long prop2_failures = 0;
  long thm1_failures = 0;
  double worst_prop1 = 0.0;  // largest violation seen, 0 if none
  double worst_prop2 = 0.0;
  double worst_thm1 = 0.0;

  bool ok() const noexcept { return prop1_failures + prop2_failures + thm1_failures == 0; }
  /// "prop1 OK prop2 OK thm1 OK" (FAIL in place of OK for a failing suite).
  std::string summary() const;
};

BoundsCheckReport run_bounds_check(const BoundsCheckOptions& options);

}  // namespace eigenfid
