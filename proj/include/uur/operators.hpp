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

#pragma once

#include <optional>

#include "uur/linalg.hpp"

namespace uur {

/// Clock and shift operators related by the discrete Fourier transform:
/// clock = diag(1, ω, ..., ω^{d-1}), shift|k⟩ = |k+1 mod d⟩, ω = e^{2πi/d}.
/// They satisfy clock·shift = ω·shift·clock.
struct DftPair {
    Index dim;
    Operator clock;
    Operator shift;
    Complex omega;
};

DftPair dft_pair(Index dim);

/// ‖clock·shift - ω·shift·clock‖_max
double commutation_residual(const DftPair &pair);

/// φ in (-π, π] with UV = e^{iφ}VU, or nullopt when UVU†V† is not a scalar
/// multiple of the identity within tol::kUnitary.
std::optional<double> commutation_phase(const Operator &u, const Operator &v);

/// cosθ|0⟩ - sinθ|d-1⟩ for θ in [0, π/2].
PureState example_state(Index dim, double theta);

/// {sinθ|0⟩ + cosθ|d-1⟩, |1⟩, ..., |d-2⟩}, the complement of example_state.
ComplementBasis canonical_complement(Index dim, double theta);

} // namespace uur
