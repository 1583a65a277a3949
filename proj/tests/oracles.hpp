// Copyright 2026 the orthopair authors
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

// Reference computations for the tests. Each one reaches its answer by a
// different route than the library: singular values come from Eigen's SVD
// instead of Hermitian eigenvalues, residuals are enumerated over basis pairs
// with module inner products, and orthogonal pairs are built from row-space
// complements instead of Gram-Schmidt.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include <Eigen/SVD>

#include "orthopair/characterize.hpp"

namespace oracle {

using namespace orthopair;

inline double spectral_norm(const Matrix& m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

inline double svd_norm(const AlgebraElement& a) {
    double out = 0.0;
    for (const Matrix& b : a.blocks()) {
        out = std::max(out, spectral_norm(b));
    }
    return out;
}

inline double svd_module_norm(const ModuleElement& x) { return std::sqrt(svd_norm(inner_product(x, x))); }

/// Singular values of the complex-matrix realization of T, descending.
inline Eigen::VectorXd singular_values(const ModuleOperator& t) {
    Eigen::JacobiSVD<Matrix> svd(realize(t).matrix());
    return svd.singularValues();
}

inline double svd_op_norm(const ModuleOperator& t) { return singular_values(t)(0); }

inline double svd_smin(const ModuleOperator& t) {
    const Eigen::VectorXd s = singular_values(t);
    return s(s.size() - 1);
}

/// Operator norm of T - U measured on the realization.
inline double op_distance(const ModuleOperator& t, const ModuleOperator& u) {
    return spectral_norm(realize(t).matrix() - realize(u).matrix());
}

/// max over canonical basis pairs of |<Tb, Sb'> - gamma <b, b'>|.
inline double basis_residual(const ModuleOperator& t, const ModuleOperator& s, const CentralElement& gamma) {
    const ModuleSpace& space = t.domain();
    std::vector<ModuleElement> basis, tb, sb;
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        basis.push_back(ModuleElement::basis_element(space, i));
        tb.push_back(t.apply(basis.back()));
        sb.push_back(s.apply(basis.back()));
    }
    const AlgebraElement g = gamma.embed();
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            worst = std::max(worst, svd_norm(inner_product(tb[i], sb[j]) - g * inner_product(basis[i], basis[j])));
        }
    }
    return worst;
}

/// Least-squares fit of <Tb, Sb'> ~ gamma <b, b'> over basis pairs, per block.
inline CentralElement basis_least_squares(const ModuleOperator& t, const ModuleOperator& s) {
    const ModuleSpace& space = t.domain();
    const auto& algebra = space.algebra;
    std::vector<Complex> num(algebra.block_count(), 0.0);
    std::vector<double> den(algebra.block_count(), 0.0);
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        const ModuleElement bi = ModuleElement::basis_element(space, i);
        const ModuleElement ti = t.apply(bi);
        for (std::size_t j = 0; j < space.dimension(); ++j) {
            const ModuleElement bj = ModuleElement::basis_element(space, j);
            const AlgebraElement g = inner_product(bi, bj);
            const AlgebraElement m = inner_product(ti, s.apply(bj));
            for (std::size_t b = 0; b < algebra.block_count(); ++b) {
                num[b] += g.block(b).conjugate().cwiseProduct(m.block(b)).sum();
                den[b] += g.block(b).squaredNorm();
            }
        }
    }
    std::vector<Complex> gamma;
    for (std::size_t b = 0; b < num.size(); ++b) {
        gamma.push_back(num[b] / den[b]);
    }
    return {algebra, gamma};
}

/// Orthogonal pair built per block: X_b (k x nk) of random rank r in [1, k],
/// Y_b with rows in the orthogonal complement of the row space of X_b.
inline std::pair<ModuleElement, ModuleElement> orthogonal_pair(const ModuleSpace& space, Rng& rng) {
    const auto& algebra = space.algebra;
    const int n = space.rank;
    std::vector<Matrix> xs, ys;
    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        const int k = algebra.block_size(b);
        const int r = rng.uniform_int(1, k);
        const Matrix x = rng.gaussian_matrix(k, r) * rng.gaussian_matrix(r, n * k);
        Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeFullV);
        const Eigen::Index rank = svd.rank();
        const Matrix v = svd.matrixV();
        const Matrix complement = v.rightCols(n * k - rank);
        // Rows of y are conjugate combinations of complement columns.
        const Matrix y = rng.gaussian_matrix(k, n * k - rank) * complement.adjoint();
        xs.push_back(x);
        ys.push_back(y);
    }
    auto assemble = [&](const std::vector<Matrix>& rows) {
        std::vector<AlgebraElement> entries;
        for (int i = 0; i < n; ++i) {
            std::vector<Matrix> blocks;
            for (std::size_t b = 0; b < algebra.block_count(); ++b) {
                const int k = algebra.block_size(b);
                blocks.push_back(rows[b].middleCols(i * k, k));
            }
            entries.emplace_back(algebra, std::move(blocks));
        }
        return ModuleElement(space, std::move(entries));
    };
    return {assemble(xs), assemble(ys)};
}

/// |<Tx, Sy>| / (|Tx| |Sy|), with norms from SVD.
inline double pair_ratio(const ModuleOperator& t, const ModuleOperator& s, const ModuleElement& x,
                         const ModuleElement& y) {
    const ModuleElement tx = t.apply(x);
    const ModuleElement sy = s.apply(y);
    const double denom = svd_module_norm(tx) * svd_module_norm(sy);
    return denom == 0.0 ? 0.0 : svd_norm(inner_product(tx, sy)) / denom;
}

/// Preserving iff the worst ratio over sampled orthogonal pairs stays at rounding level.
inline bool brute_force_preserving(const ModuleOperator& t, const ModuleOperator& s, std::uint64_t seed,
                                   int pairs = 2000, double threshold = 1e-8) {
    Rng rng(seed);
    for (int i = 0; i < pairs; ++i) {
        const auto [x, y] = orthogonal_pair(t.domain(), rng);
        if (pair_ratio(t, s, x, y) > threshold) {
            return false;
        }
    }
    return true;
}

}  // namespace oracle
