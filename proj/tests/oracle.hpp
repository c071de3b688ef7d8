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

// Reference arithmetic for the tests. Deliberately written with nested
// loops over std::complex and no Eigen, so the checks do not share code
// paths with the library under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "uur/linalg.hpp"

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<Vec>;

inline Vec from(const uur::CVector &v) {
    Vec out(static_cast<std::size_t>(v.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = v(static_cast<uur::Index>(i));
    }
    return out;
}

inline Mat from(const uur::CMatrix &m) {
    Mat out(static_cast<std::size_t>(m.rows()), Vec(static_cast<std::size_t>(m.cols())));
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < out[i].size(); ++j) {
            out[i][j] = m(static_cast<uur::Index>(i), static_cast<uur::Index>(j));
        }
    }
    return out;
}

inline Vec apply(const Mat &m, const Vec &x) {
    Vec y(m.size(), C{});
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            y[i] += m[i][j] * x[j];
        }
    }
    return y;
}

// ⟨x|y⟩
inline C inner(const Vec &x, const Vec &y) {
    C s{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

inline C expect(const Mat &m, const Vec &psi) {
    return inner(psi, apply(m, psi));
}

// ⟨A†A⟩ - |⟨A⟩|²
inline double variance(const Mat &a, const Vec &psi) {
    const Vec ap = apply(a, psi);
    return std::real(inner(ap, ap)) - std::norm(inner(psi, ap));
}

// ⟨A†B⟩ - ⟨A⟩*⟨B⟩
inline C covariance(const Mat &a, const Mat &b, const Vec &psi) {
    const Vec ap = apply(a, psi);
    const Vec bp = apply(b, psi);
    return inner(ap, bp) - std::conj(inner(psi, ap)) * inner(psi, bp);
}

inline Mat clock(std::size_t d) {
    Mat m(d, Vec(d, C{}));
    for (std::size_t k = 0; k < d; ++k) {
        m[k][k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                      static_cast<double>(d));
    }
    return m;
}

// |k⟩ -> |k+1 mod d⟩
inline Mat shift(std::size_t d) {
    Mat m(d, Vec(d, C{}));
    for (std::size_t k = 0; k < d; ++k) {
        m[(k + 1) % d][k] = 1.0;
    }
    return m;
}

inline Mat sigma_z() {
    return {{1.0, 0.0}, {0.0, -1.0}};
}

inline Mat sigma_x() {
    return {{0.0, 1.0}, {1.0, 0.0}};
}

inline Vec example_state(std::size_t d, double theta) {
    Vec v(d, C{});
    v[0] = std::cos(theta);
    v[d - 1] += -std::sin(theta);
    return v;
}

inline uur::CVector to_eigen(const Vec &v) {
    uur::CVector out(static_cast<uur::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        out(static_cast<uur::Index>(i)) = v[i];
    }
    return out;
}

inline uur::CMatrix to_eigen(const Mat &m) {
    uur::CMatrix out(static_cast<uur::Index>(m.size()), static_cast<uur::Index>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out(static_cast<uur::Index>(i), static_cast<uur::Index>(j)) = m[i][j];
        }
    }
    return out;
}

// min over a uniform grid of x + y subject to
// (1+2K)xy + K²(x+y) >= K², with x, y in [0, 1].
inline double msuur_grid_minimum(double k, double step) {
    double best = 2.0;
    const int n = static_cast<int>(std::round(1.0 / step));
    for (int i = 0; i <= n; ++i) {
        const double x = i * step;
        for (int j = 0; j <= n; ++j) {
            const double y = j * step;
            if ((1.0 + 2.0 * k) * x * y + k * k * (x + y) >= k * k) {
                best = std::min(best, x + y);
                break; // larger y only increases x + y
            }
        }
    }
    return best;
}

} // namespace oracle
