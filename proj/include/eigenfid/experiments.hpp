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

// Parameter sweeps over JC-driven gates: eigenerror scaling with the drive,
// repeated gates with fresh drives, and a fixed photon budget split over
// several shorter gates.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigenfid/haar.hpp"
#include "eigenfid/jcdrive.hpp"

namespace eigenfid {

enum class SweepMode { Scaling, Concat, Split };

/// Which mean photon number normalizes the sub-gate time in split mode.
enum class SplitConvention {
  /// Sub-gate runs for t/C (t from the full budget), so its reduced time at
  /// n/C photons is g sqrt(n/C) t / C = tau / C^{3/2}.
  SharedTime,
  /// Sub-gate reduced time is tau/C measured at its own n/C photons.
  PerPulse,
};

std::string_view to_string(SweepMode mode) noexcept;
std::string_view to_string(SplitConvention conv) noexcept;

struct DriveSpec {
  DriveKind kind = DriveKind::Poisson;
  BinomialMode binomial_mode = BinomialMode::MomentMatched;
  std::optional<int> fock_n;     // Fock: N, else taken from the nbar grid
  int custom_n_min = 0;          // Custom only
  CVector custom_coefficients;   // Custom only
};

struct SweepConfig {
  SweepMode mode = SweepMode::Scaling;
  DriveSpec drive;
  std::vector<double> nbar{100.0};
  std::vector<double> fano{1.0};  // ignored for Poisson and Fock drives
  std::vector<double> tau{kPi / 2};
  std::vector<int> concat{1};
  std::vector<double> ctau;       // Concat: extra rows at tau = ctau / C
  std::vector<SplitConvention> split_conventions{SplitConvention::SharedTime,
                                                 SplitConvention::PerPulse};
  double coupling = 1.0;
  double carrier = 1.0;
  std::uint64_t seed = 0;
  std::size_t mc_samples = 0;     // 0 disables the Monte Carlo columns
  int jobs = 1;
  bool timing = false;            // runtime_ms column (non-deterministic)
  std::string output;
};

/// Reference sweep for each mode.
SweepConfig default_config(SweepMode mode);

/// Throws ConfigError naming the first offending field.
void validate(const SweepConfig& cfg);

struct SweepRow {
  SweepMode mode = SweepMode::Scaling;
  DriveKind kind = DriveKind::Poisson;
  double nbar = 0.0;       // requested mean (split: total budget)
  double fano = 1.0;
  double tau = 0.0;        // gate reduced time (split: of the unsplit gate)
  int concat = 1;
  std::optional<double> ctau;
  std::optional<SplitConvention> convention;
  double tau_sub = 0.0;    // reduced time of each applied gate
  double eigenerror_exact = 0.0;        // 1 - rbar, deterministic quadrature
  double eigenerror_bound_lower = 0.0;  // Sbar_L / 2
  double eigenerror_bound_upper = 0.0;  // Sbar_L
  std::optional<double> asymptote;      // single-gate closed form; absent for C > 1
  double energy = 0.0;                  // photons used times hbar omega
  std::optional<McEstimate> mc_eigenerror;
  double runtime_ms = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
};

/// Drive for one grid point.
DriveDistribution make_drive(const DriveSpec& spec, double nbar, double fano);

SweepResult run_scaling(const SweepConfig& cfg);
SweepResult run_concat(const SweepConfig& cfg);
SweepResult run_split(const SweepConfig& cfg);
/// Dispatches on cfg.mode.
SweepResult run_sweep(const SweepConfig& cfg);

/// Locale-independent scientific notation with 12 significant digits.
std::string format_number(double v);

std::string to_csv(const SweepResult& result);

/// Writes the CSV through a temporary file and an atomic rename, so a failed
/// run never leaves a partial file at `path`.
void write_csv(const SweepResult& result, const std::string& path);

}  // namespace eigenfid
