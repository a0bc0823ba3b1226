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

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigenfid {

enum class ErrorCode {
  NonHermitianInput,
  NotDensityMatrix,
  DimensionMismatch,
  InvalidOrder,
  InvalidDimension,
  InvalidArgument,
  CPViolation,
  InvalidChannel,
  InvalidMean,
  UnsupportedParameters,
  TruncationError,
  ApproximationDomain,
  NonpositiveMeanEnergy,
  BudgetTooSmall,
  ConfigError,
  SchemaError,
  IOError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` identifies the condition;
/// the message carries the detail (offending value, JSON pointer, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by user configuration rather than numerics.
  bool is_config_error() const noexcept {
    return code_ == ErrorCode::ConfigError || code_ == ErrorCode::SchemaError;
  }

 private:
  ErrorCode code_;
};

}  // namespace eigenfid
