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

#include "uur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace uur {

const char *error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument:
        return "invalid argument";
    case ErrorCode::DimensionMismatch:
        return "dimension mismatch";
    case ErrorCode::NotNormalized:
        return "not normalized";
    case ErrorCode::NotUnitary:
        return "not unitary";
    case ErrorCode::NotHermitian:
        return "not hermitian";
    case ErrorCode::NotOrthonormal:
        return "not orthonormal";
    case ErrorCode::AnchorMismatch:
        return "basis anchor mismatch";
    case ErrorCode::DegenerateVariance:
        return "degenerate variance";
    case ErrorCode::VanishingDenominator:
        return "vanishing denominator";
    case ErrorCode::BranchAmbiguity:
        return "branch ambiguity";
    case ErrorCode::NoCommutationPhase:
        return "no scalar commutation phase";
    case ErrorCode::Numerical:
        return "numerical failure";
    case ErrorCode::Io:
        return "i/o error";
    }
    return "unknown error";
}

namespace {

bool all_finite(const CMatrix &m) {
    return m.allFinite();
}

void require_square(const CMatrix &m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw Error(ErrorCode::DimensionMismatch, "operator matrix must be square and nonempty");
    }
    if (!all_finite(m)) {
        throw Error(ErrorCode::InvalidArgument, "operator has non-finite entries");
    }
}

CVector gaussian_vector(Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(dim);
    for (Index i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = Complex(re, im);
    }
    return v;
}

CMatrix gaussian_matrix(Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

void require_dim(Index dim) {
    if (dim < 2) {
        throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2");
    }
}

} // namespace

double max_abs(const CMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix &m) {
    return max_abs(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols()));
}

double hermiticity_defect(const CMatrix &m) {
    return max_abs(m - m.adjoint());
}

// --- PureState -------------------------------------------------------------

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    require_dim(amplitudes_.size());
    if (!amplitudes_.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "state has non-finite amplitudes");
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > tol::kNorm) {
        std::ostringstream msg;
        msg << "state norm " << norm << " differs from 1";
        throw Error(ErrorCode::NotNormalized, msg.str());
    }
}

PureState PureState::normalized(CVector amplitudes) {
    if (!amplitudes.allFinite()) {
        throw Error(ErrorCode::InvalidArgument, "state has non-finite amplitudes");
    }
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    }
    return PureState(amplitudes / norm);
}

PureState PureState::with_phase(double alpha) const {
    return PureState(amplitudes_ * std::polar(1.0, alpha));
}

// --- Operator --------------------------------------------------------------

Operator::Operator(CMatrix m, OperatorKind kind) : matrix_(std::move(m)), kind_(kind) {}

Operator Operator::general(CMatrix m) {
    require_square(m);
    return Operator(std::move(m), OperatorKind::General);
}

Operator Operator::unitary(CMatrix m) {
    require_square(m);
    const double defect = unitarity_defect(m);
    if (defect > tol::kUnitary) {
        std::ostringstream msg;
        msg << "max |U†U - 1| = " << defect << " exceeds tolerance";
        throw Error(ErrorCode::NotUnitary, msg.str());
    }
    return Operator(std::move(m), OperatorKind::Unitary);
}

Operator Operator::hermitian(CMatrix m) {
    require_square(m);
    const double defect = hermiticity_defect(m);
    if (defect > tol::kUnitary) {
        std::ostringstream msg;
        msg << "max |A - A†| = " << defect << " exceeds tolerance";
        throw Error(ErrorCode::NotHermitian, msg.str());
    }
    return Operator(std::move(m), OperatorKind::Hermitian);
}

Operator Operator::identity(Index dim) {
    require_dim(dim);
    return Operator(CMatrix::Identity(dim, dim), OperatorKind::Unitary);
}

Operator Operator::adjoint() const {
    return Operator(matrix_.adjoint(), kind_);
}

// --- ComplementBasis -------------------------------------------------------

ComplementBasis::ComplementBasis(PureState anchor, std::vector<CVector> vectors)
    : anchor_(std::move(anchor)), vectors_(std::move(vectors)) {
    const Index d = anchor_.dim();
    if (static_cast<Index>(vectors_.size()) != d - 1) {
        throw Error(ErrorCode::DimensionMismatch, "complement basis needs exactly d-1 vectors");
    }
    const CVector &psi = anchor_.amplitudes();
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
        const CVector &b = vectors_[k];
        if (b.size() != d) {
            throw Error(ErrorCode::DimensionMismatch, "complement vector has wrong dimension");
        }
        if (!b.allFinite()) {
            throw Error(ErrorCode::InvalidArgument, "complement vector has non-finite entries");
        }
        if (std::abs(b.norm() - 1.0) > tol::kNorm) {
            throw Error(ErrorCode::NotOrthonormal, "complement vector is not unit norm");
        }
        if (std::abs(psi.dot(b)) > tol::kOrth) {
            throw Error(ErrorCode::NotOrthonormal, "complement vector overlaps the anchor state");
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(vectors_[j].dot(b)) > tol::kOrth) {
                throw Error(ErrorCode::NotOrthonormal, "complement vectors are not orthogonal");
            }
        }
    }
    if (completeness_defect() > tol::kOrth) {
        throw Error(ErrorCode::NotOrthonormal, "complement basis is incomplete");
    }
}

double ComplementBasis::completeness_defect() const {
    const CVector &psi = anchor_.amplitudes();
    const Index d = psi.size();
    CMatrix residual = CMatrix::Identity(d, d) - psi * psi.adjoint();
    for (const auto &b : vectors_) {
        residual -= b * b.adjoint();
    }
    return max_abs(residual);
}

bool ComplementBasis::anchored_at(const PureState &psi) const {
    if (psi.dim() != dim()) {
        return false;
    }
    return 1.0 - std::abs(anchor_.amplitudes().dot(psi.amplitudes())) <= tol::kOrth;
}

// --- operations ------------------------------------------------------------

Complex expectation(const CMatrix &op, const PureState &psi) {
    if (op.rows() != psi.dim() || op.cols() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
    }
    const CVector &a = psi.amplitudes();
    return a.dot(op * a);
}

Complex expectation(const Operator &op, const PureState &psi) {
    return expectation(op.matrix(), psi);
}

ComplementBasis complete_complement(const PureState &psi, std::span<const CVector> seed_vectors) {
    const Index d = psi.dim();
    const CVector &amps = psi.amplitudes();

    Index dropped = 0;
    for (Index i = 1; i < d; ++i) {
        if (std::abs(amps(i)) > std::abs(amps(dropped))) {
            dropped = i;
        }
    }

    std::vector<CVector> candidates;
    candidates.reserve(seed_vectors.size() + static_cast<std::size_t>(d));
    for (const auto &s : seed_vectors) {
        if (s.size() != d) {
            throw Error(ErrorCode::DimensionMismatch, "seed vector has wrong dimension");
        }
        if (!s.allFinite()) {
            throw Error(ErrorCode::InvalidArgument, "seed vector has non-finite entries");
        }
        candidates.push_back(s);
    }
    for (Index i = 0; i < d; ++i) {
        if (i != dropped) {
            candidates.push_back(CVector::Unit(d, i));
        }
    }
    candidates.push_back(CVector::Unit(d, dropped));

    std::vector<CVector> accepted;
    accepted.reserve(static_cast<std::size_t>(d - 1));
    for (const auto &candidate : candidates) {
        if (static_cast<Index>(accepted.size()) == d - 1) {
            break;
        }
        const double original = candidate.norm();
        if (original == 0.0) {
            continue;
        }
        CVector v = candidate;
        for (int pass = 0; pass < 2; ++pass) {
            v -= amps * amps.dot(v);
            for (const auto &q : accepted) {
                v -= q * q.dot(v);
            }
        }
        const double projected = v.norm();
        if (projected < tol::kOrth * original) {
            continue;
        }
        accepted.push_back(v / projected);
    }
    return ComplementBasis(psi, std::move(accepted));
}

ComplementBasis random_complement(const PureState &psi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CVector> seeds;
    for (Index k = 0; k + 1 < psi.dim(); ++k) {
        seeds.push_back(gaussian_vector(psi.dim(), rng));
    }
    return complete_complement(psi, seeds);
}

Operator principal_log_generator(const Operator &u, double scale, BranchPolicy policy) {
    if (!u.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "principal log requires a unitary operator");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error(ErrorCode::InvalidArgument, "scale must be positive");
    }
    const Index d = u.dim();
    Eigen::ComplexSchur<CMatrix> schur(u.matrix());
    if (schur.info() != Eigen::Success) {
        throw Error(ErrorCode::Numerical, "Schur decomposition did not converge");
    }
    const CMatrix &t = schur.matrixT();
    const CMatrix &q = schur.matrixU();

    Eigen::VectorXd phases(d);
    for (Index i = 0; i < d; ++i) {
        double phase = std::arg(t(i, i));
        if (std::numbers::pi - std::abs(phase) <= tol::kBranch) {
            if (policy == BranchPolicy::Reject) {
                std::ostringstream msg;
                msg << "eigenphase " << phase << " lies on the principal branch cut";
                throw Error(ErrorCode::BranchAmbiguity, msg.str());
            }
            phase = std::numbers::pi;
        }
        phases(i) = phase / scale;
    }
    CMatrix h = q * phases.cast<Complex>().asDiagonal() * q.adjoint();
    h = (0.5 * (h + h.adjoint())).eval();
    Operator generator = Operator::hermitian(std::move(h));

    const double defect = max_abs(exp_i_hermitian(generator, scale) - u.matrix());
    if (defect > tol::kLog) {
        std::ostringstream msg;
        msg << "principal log round trip error " << defect << " exceeds tolerance";
        throw Error(ErrorCode::Numerical, msg.str());
    }
    return generator;
}

CMatrix exp_i_hermitian(const Operator &h, double scale) {
    if (!h.is_hermitian()) {
        throw Error(ErrorCode::NotHermitian, "exp_i_hermitian requires a Hermitian operator");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h.matrix());
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorCode::Numerical, "Hermitian eigensolver did not converge");
    }
    const Eigen::VectorXd &lambda = eig.eigenvalues();
    CVector phases(lambda.size());
    for (Index i = 0; i < lambda.size(); ++i) {
        phases(i) = std::polar(1.0, scale * lambda(i));
    }
    const CMatrix &v = eig.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    // splitmix64 finalizer applied to each coordinate in turn
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(seed);
    h = mix(h ^ a);
    h = mix(h ^ b);
    h = mix(h ^ c);
    return h;
}

PureState random_pure_state(Index dim, std::uint64_t seed) {
    require_dim(dim);
    std::mt19937_64 rng(seed);
    return PureState::normalized(gaussian_vector(dim, rng));
}

Operator random_unitary(Index dim, std::uint64_t seed) {
    require_dim(dim);
    std::mt19937_64 rng(seed);
    const CMatrix g = gaussian_matrix(dim, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    const CMatrix &r = qr.matrixQR();
    for (Index j = 0; j < dim; ++j) {
        const Complex diag = r(j, j);
        const double mod = std::abs(diag);
        q.col(j) *= mod == 0.0 ? Complex(1.0) : diag / mod;
    }
    return Operator::unitary(std::move(q));
}

Operator random_hermitian(Index dim, std::uint64_t seed) {
    require_dim(dim);
    std::mt19937_64 rng(seed);
    const CMatrix g = gaussian_matrix(dim, rng);
    CMatrix h = 0.5 * (g + g.adjoint());
    return Operator::hermitian(std::move(h));
}

Operator random_general(Index dim, std::uint64_t seed) {
    require_dim(dim);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    CMatrix m(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            const double re = uniform(rng);
            const double im = uniform(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return Operator::general(std::move(m));
}

} // namespace uur
