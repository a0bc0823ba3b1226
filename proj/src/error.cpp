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

#include "eigenfid/error.hpp"

namespace eigenfid {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CPViolation: return "CPViolation";
    case ErrorCode::InvalidChannel: return "InvalidChannel";
    case ErrorCode::InvalidMean: return "InvalidMean";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::TruncationError: return "TruncationError";
    case ErrorCode::ApproximationDomain: return "ApproximationDomain";
    case ErrorCode::NonpositiveMeanEnergy: return "NonpositiveMeanEnergy";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace eigenfid
