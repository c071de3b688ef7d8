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

#include "uur/operators.hpp"

#include <cmath>
#include <numbers>

namespace uur {

namespace {

// e^{2πik/d}, exact at quarter turns so that d = 2 gives σz exactly.
Complex root_of_unity(Index k, Index d) {
    k %= d;
    if ((4 * k) % d == 0) {
        switch ((4 * k) / d) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        case 3:
            return {0.0, -1.0};
        default:
            break;
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
}

void require_theta(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
        throw Error(ErrorCode::InvalidArgument, "theta must lie in [0, pi/2]");
    }
}

} // namespace

DftPair dft_pair(Index dim) {
    if (dim < 2) {
        throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2");
    }
    CMatrix clock = CMatrix::Zero(dim, dim);
    CMatrix shift = CMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
        clock(k, k) = root_of_unity(k, dim);
        shift((k + 1) % dim, k) = 1.0;
    }
    return DftPair{dim, Operator::unitary(std::move(clock)), Operator::unitary(std::move(shift)),
                   root_of_unity(1, dim)};
}

double commutation_residual(const DftPair &pair) {
    const CMatrix &u = pair.clock.matrix();
    const CMatrix &v = pair.shift.matrix();
    return max_abs(u * v - pair.omega * (v * u));
}

std::optional<double> commutation_phase(const Operator &u, const Operator &v) {
    if (!u.is_unitary() || !v.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "commutation phase requires unitary operators");
    }
    if (u.dim() != v.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operators have different dimensions");
    }
    const CMatrix &um = u.matrix();
    const CMatrix &vm = v.matrix();
    const CMatrix group = um * vm * um.adjoint() * vm.adjoint();
    const Complex lambda = group(0, 0);
    const Index d = u.dim();
    if (max_abs(group - lambda * CMatrix::Identity(d, d)) > tol::kUnitary) {
        return std::nullopt;
    }
    double phi = std::arg(lambda);
    if (phi <= -std::numbers::pi) {
        phi = std::numbers::pi;
    }
    return phi;
}

PureState example_state(Index dim, double theta) {
    require_theta(theta);
    if (dim < 2) {
        throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2");
    }
    CVector amps = CVector::Zero(dim);
    amps(0) = std::cos(theta);
    amps(dim - 1) = -std::sin(theta);
    return PureState(std::move(amps));
}

ComplementBasis canonical_complement(Index dim, double theta) {
    PureState psi = example_state(dim, theta);
    std::vector<CVector> vectors;
    vectors.reserve(static_cast<std::size_t>(dim - 1));
    CVector first = CVector::Zero(dim);
    first(0) = std::sin(theta);
    first(dim - 1) = std::cos(theta);
    vectors.push_back(std::move(first));
    for (Index k = 1; k + 1 < dim; ++k) {
        vectors.push_back(CVector::Unit(dim, k));
    }
    return ComplementBasis(std::move(psi), std::move(vectors));
}

} // namespace uur
