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

// JSON files: sweep configs (schema 1), state and channel files, and the
// sidecar written next to a sweep CSV.
//
// Sweep config, every field optional except "schema":
//
//   {"schema": 1, "mode": "scaling" | "concat" | "split",
//    "drive": {"kind": "poisson" | "binomial" | "fock" | "custom",
//              "nbar": x, "fano": s, "N": n, "n_min": n, "coeffs": [[re, im], ...],
//              "binomial_mode": "moment_matched" | "literal"},
//    "nbar": [...], "fano": [...], "tau": [...], "concat": [...], "ctau": [...],
//    "split_convention": "shared_time" | "per_pulse" | "both",
//    "coupling": g, "carrier": omega, "seed": u64, "mc_samples": n, "jobs": n,
//    "timing": bool, "output": "path.csv"}
//
// Grid fields accept a bare number for a single point. drive.nbar / drive.fano
// are shorthands for one-point grids and may not be combined with the
// top-level grids. Unknown fields are rejected.
//
// State file:   {"schema": 1, "type": "state", "matrix": [[z, ...], ...]}
//               or "amplitudes": [z, ...]; optional "energies": [e1, e2, ...]
// Channel file: {"schema": 1, "type": "channel", "E00": M, "E01": M, "E10": M, "E11": M}
// where z is [re, im] or a real number and M a 2x2 array of z.

#pragma once

#include <optional>
#include <string>

#include "eigenfid/channel.hpp"
#include "eigenfid/experiments.hpp"

namespace eigenfid {

/// git-describe style version baked in at build time.
const char* version_string() noexcept;

/// Parses a schema-1 sweep config on top of default_config(mode). A "mode"
/// field that disagrees with `mode` is a ConfigError. Errors name the
/// offending field as a JSON pointer.
SweepConfig parse_sweep_config(const std::string& json_text, SweepMode mode);
SweepConfig load_sweep_config(const std::string& path, SweepMode mode);

/// Canonical JSON for a config (the sidecar's "config" member).
std::string sweep_config_to_json(const SweepConfig& cfg);

/// {"version", "config", "rows"}; written atomically like the CSV.
std::string sidecar_json(const SweepResult& result);
void write_sidecar(const SweepResult& result, const std::string& path);

struct LoadedObject {
  std::optional<DensityMatrix> state;
  std::optional<RVector> energies;
  std::optional<QubitChannel> channel;
};

/// Throws SchemaError with a JSON pointer for malformed or invalid content.
LoadedObject parse_object(const std::string& json_text);
LoadedObject load_object(const std::string& path);

std::string dump_state(const DensityMatrix& rho, const std::optional<RVector>& energies = {});
std::string dump_channel(const QubitChannel& channel);
std::string dump_object(const LoadedObject& obj);

/// "key value" lines: eigenfidelity, purity, bounds, residuals, ...
std::string inspect_report(const LoadedObject& obj);

/// Whole file as a string; IOError when unreadable.
std::string read_text_file(const std::string& path);
/// Temporary file + rename.
void write_text_file_atomic(const std::string& path, const std::string& text);

}  // namespace eigenfid
