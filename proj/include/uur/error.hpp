// Copyright 2026 The uur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Error type shared by every module, and the numerical tolerances the
 * library validates against.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace uur {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NotNormalized,
    NotUnitary,
    NotHermitian,
    NotOrthonormal,
    AnchorMismatch,
    DegenerateVariance,
    VanishingDenominator,
    BranchAmbiguity,
    NoCommutationPhase,
    Numerical,
    Io,
};

/// Human readable name of an error code, e.g. "degenerate variance".
const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

namespace tol {
inline constexpr double kNorm = 1e-12;
inline constexpr double kOrth = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kLog = 1e-8;
inline constexpr double kBranch = 1e-9;
inline constexpr double kEq = 1e-10;
// Equalities written as a quotient lose a few digits to cancellation.
inline constexpr double kQuotient = 1e-8;
inline constexpr double kDegenerate = 1e-12;
// Amplitudes below this modulus count as zero when counting nonzero terms.
inline constexpr double kZeroAmplitude = 1e-14;
inline constexpr double kRelativeFloor = 1e-15;
} // namespace tol

} // namespace uur
