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
 * Dense complex linear algebra for small Hilbert spaces: validated pure
 * states and operators, orthonormal completion of a state's complement,
 * the principal logarithm of a unitary, and seeded Haar sampling.
 *
 * All types are immutable after construction and every public constructor
 * validates its invariants, so a value that exists is a valid value.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "uur/error.hpp"

namespace uur {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Largest entry modulus, ‖M‖_max.
double max_abs(const CMatrix &m);
double unitarity_defect(const CMatrix &m);
double hermiticity_defect(const CMatrix &m);

/**
 * @brief Normalized state vector of dimension d >= 2.
 */
class PureState {
  public:
    /// Takes amplitudes that must already have unit norm (within tol::kNorm).
    explicit PureState(CVector amplitudes);

    /// Rescales an arbitrary nonzero vector to unit norm.
    static PureState normalized(CVector amplitudes);

    [[nodiscard]] Index dim() const { return amplitudes_.size(); }
    [[nodiscard]] const CVector &amplitudes() const { return amplitudes_; }

    /// e^{iα}|ψ⟩
    [[nodiscard]] PureState with_phase(double alpha) const;

  private:
    CVector amplitudes_;
};

enum class OperatorKind { General, Unitary, Hermitian };

/**
 * @brief Square complex matrix carrying a validated kind tag.
 *
 * Operator::unitary and Operator::hermitian reject matrices that violate
 * the respective property by more than tol::kUnitary entrywise.
 */
class Operator {
  public:
    static Operator general(CMatrix m);
    static Operator unitary(CMatrix m);
    static Operator hermitian(CMatrix m);
    static Operator identity(Index dim);

    [[nodiscard]] Index dim() const { return matrix_.rows(); }
    [[nodiscard]] const CMatrix &matrix() const { return matrix_; }
    [[nodiscard]] OperatorKind kind() const { return kind_; }
    [[nodiscard]] bool is_unitary() const { return kind_ == OperatorKind::Unitary; }
    [[nodiscard]] bool is_hermitian() const { return kind_ == OperatorKind::Hermitian; }

    /// Adjoint, keeping the kind tag.
    [[nodiscard]] Operator adjoint() const;

  private:
    Operator(CMatrix m, OperatorKind kind);

    CMatrix matrix_;
    OperatorKind kind_;
};

/**
 * @brief Orthonormal basis {|ψ⊥_k⟩}, k = 1..d-1, of the orthogonal
 * complement of an anchor state.
 *
 * The constructor checks unit norms, mutual orthogonality, orthogonality
 * to the anchor, and completeness: Σ_k |b_k⟩⟨b_k| = 1 - |ψ⟩⟨ψ|.
 */
class ComplementBasis {
  public:
    ComplementBasis(PureState anchor, std::vector<CVector> vectors);

    [[nodiscard]] Index dim() const { return anchor_.dim(); }
    [[nodiscard]] const PureState &anchor() const { return anchor_; }
    [[nodiscard]] std::span<const CVector> vectors() const { return vectors_; }
    [[nodiscard]] std::size_t size() const { return vectors_.size(); }
    [[nodiscard]] const CVector &operator[](std::size_t k) const { return vectors_[k]; }

    /// ‖(1 - |ψ⟩⟨ψ|) - Σ_k |b_k⟩⟨b_k|‖_max
    [[nodiscard]] double completeness_defect() const;

    /// True when `psi` equals the anchor up to a global phase.
    [[nodiscard]] bool anchored_at(const PureState &psi) const;

  private:
    PureState anchor_;
    std::vector<CVector> vectors_;
};

/// ⟨ψ|op|ψ⟩
Complex expectation(const Operator &op, const PureState &psi);
Complex expectation(const CMatrix &op, const PureState &psi);

/**
 * @brief Completes psi to an orthonormal basis by Gram-Schmidt.
 *
 * Candidates are taken in order: the seed vectors, then the computational
 * axes with the axis of largest |amplitude| of psi moved to the end (ties:
 * lowest index is the one moved). Each candidate is orthogonalized twice
 * against psi and the vectors accepted so far; candidates whose projected
 * norm falls below tol::kOrth relative to their original norm are skipped.
 */
ComplementBasis complete_complement(const PureState &psi,
                                    std::span<const CVector> seed_vectors = {});

/// Complement seeded by d-1 complex Gaussian vectors.
ComplementBasis random_complement(const PureState &psi, std::uint64_t seed);

enum class BranchPolicy {
    /// Eigenphases within tol::kBranch of ±π raise ErrorCode::BranchAmbiguity.
    Reject,
    /// Eigenphases within tol::kBranch of ±π are taken as +π.
    PreferPositive,
};

/**
 * @brief Hermitian h with exp(i·scale·h) = u, on the principal branch.
 *
 * Eigenphases are taken in (-π, π] from the complex Schur form of u, which
 * is diagonal for a normal matrix. The result is checked by reconstructing
 * u to within tol::kLog.
 */
Operator principal_log_generator(const Operator &u, double scale,
                                 BranchPolicy policy = BranchPolicy::Reject);

/// exp(i·scale·h) for Hermitian h.
CMatrix exp_i_hermitian(const Operator &h, double scale);

/// Deterministic 64-bit mix of a seed with stream coordinates.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0);

PureState random_pure_state(Index dim, std::uint64_t seed);
/// Haar unitary: QR of a complex Ginibre matrix with R's diagonal phases removed.
Operator random_unitary(Index dim, std::uint64_t seed);
/// Hermitian (G + G†)/2 for complex Gaussian G.
Operator random_hermitian(Index dim, std::uint64_t seed);
/// General operator with real and imaginary parts uniform in [-1, 1].
Operator random_general(Index dim, std::uint64_t seed);

} // namespace uur
