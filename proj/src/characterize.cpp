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

#include "orthopair/characterize.hpp"

#include <algorithm>
#include <cmath>

namespace orthopair {

namespace {

constexpr std::uint64_t kWitnessStream = 0x5749544E45535321ull;

void require_pair(const ModuleOperator& t, const ModuleOperator& s) {
    require_same_space(t.domain(), s.domain());
    require_same_space(t.codomain(), s.codomain());
}

}  // namespace

std::string_view verdict_name(VerdictKind kind) noexcept {
    switch (kind) {
        case VerdictKind::Preserving: return "preserving";
        case VerdictKind::NotPreserving: return "not_preserving";
        case VerdictKind::ZeroPair: return "zero_pair";
        case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

double characterization_tolerance(const ModuleOperator& t, const ModuleOperator& s, double tol) {
    return tol * op_norm(t) * op_norm(s);
}

GammaEstimate estimate_gamma(const ModuleOperator& t, const ModuleOperator& s, const ExtractOptions& options) {
    require_pair(t, s);
    const auto& algebra = t.domain().algebra;
    Rng rng(options.seed);
    GammaEstimate est;
    est.tolerance = characterization_tolerance(t, s, options.tol);
    std::vector<Complex> means;
    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        std::vector<ProjectionGamma> block_samples;
        for (int p = 0; p <= options.random_projections; ++p) {
            const AlgebraElement e = p == 0
                                         ? minimal_projection(algebra, b)
                                         : minimal_projection(algebra, b, rng.unit_vector(algebra.block_size(b)));
            std::optional<ModuleElement> ex;
            for (int draw = 0; draw < 32 && !ex; ++draw) {
                const ModuleElement x = ModuleElement::random(t.domain(), rng);
                ModuleElement candidate = e * x;
                if (module_norm(candidate) > 0.1 * module_norm(x)) {
                    ex = std::move(candidate);
                }
            }
            if (!ex) {
                throw Error(Errc::DegenerateSample, "no x with |ex| > 0.1 |x| in 32 draws for block " +
                                                        std::to_string(b));
            }
            const Complex num = inner_product(t.apply(*ex), s.apply(*ex)).trace();
            const Complex den = inner_product(*ex, *ex).trace();
            block_samples.push_back({b, p == 0 ? "canonical" : "random-" + std::to_string(p), num / den});
        }
        Complex sum = 0.0;
        for (std::size_t i = 0; i < block_samples.size(); ++i) {
            sum += block_samples[i].gamma;
            for (std::size_t j = i + 1; j < block_samples.size(); ++j) {
                est.spread = std::max(est.spread, std::abs(block_samples[i].gamma - block_samples[j].gamma));
            }
        }
        means.push_back(sum / static_cast<double>(block_samples.size()));
        est.samples.insert(est.samples.end(), block_samples.begin(), block_samples.end());
    }
    est.gamma = CentralElement(algebra, std::move(means));
    est.consistent = est.spread <= est.tolerance;
    est.least_squares = least_squares_gamma(t, s);
    return est;
}

GammaEstimate extract_gamma(const ModuleOperator& t, const ModuleOperator& s, const ExtractOptions& options) {
    GammaEstimate est = estimate_gamma(t, s, options);
    if (!est.consistent) {
        throw Error(Errc::InconsistentGamma, "cross-projection spread " + std::to_string(est.spread) +
                                                 " exceeds " + std::to_string(est.tolerance));
    }
    return est;
}

// On canonical basis pairs of block b the form <Tx, Sy> - gamma <x, y> takes
// the values R_b(i, j) E_rr' with R_b = M_T M_S^* - gamma_b, and pairs from
// different blocks give zero. Both routines below read R_b directly.

CentralElement least_squares_gamma(const ModuleOperator& t, const ModuleOperator& s) {
    require_pair(t, s);
    const auto& algebra = t.domain().algebra;
    std::vector<Complex> gamma;
    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        const Matrix m = t.block_matrix(b) * s.block_matrix(b).adjoint();
        gamma.push_back(m.trace() / static_cast<double>(m.rows()));
    }
    return {algebra, std::move(gamma)};
}

double verify_characterization(const ModuleOperator& t, const ModuleOperator& s, const CentralElement& gamma) {
    require_pair(t, s);
    require_same_algebra(gamma.descriptor(), t.domain().algebra);
    double residual = 0.0;
    for (std::size_t b = 0; b < gamma.scalars().size(); ++b) {
        Matrix r = t.block_matrix(b) * s.block_matrix(b).adjoint();
        r.diagonal().array() -= gamma[b];
        residual = std::max(residual, r.cwiseAbs().maxCoeff());
    }
    return residual;
}

bool confirm_witness(const ModuleOperator& t, const ModuleOperator& s, const Witness& w, double witness_tol) {
    require_pair(t, s);
    const double nx = module_norm(w.x);
    const double ny = module_norm(w.y);
    const ModuleElement tx = t.apply(w.x);
    const ModuleElement sy = s.apply(w.y);
    const double denom = module_norm(tx) * module_norm(sy);
    if (nx == 0.0 || ny == 0.0 || denom == 0.0) {
        return false;
    }
    const bool orthogonal = inner_product(w.x, w.y).norm() <= 1e-12 * nx * ny;
    const bool violated = inner_product(tx, sy).norm() > witness_tol * denom;
    return orthogonal && violated;
}

std::optional<Witness> search_witness(const ModuleOperator& t, const ModuleOperator& s, std::uint64_t seed,
                                      int budget, double witness_tol) {
    require_pair(t, s);
    const ModuleSpace& space = t.domain();
    for (int attempt = 0; attempt < budget; ++attempt) {
        Rng rng(derive_seed(seed ^ kWitnessStream, static_cast<std::uint64_t>(attempt)));
        ModuleElement x = ModuleElement::random(space, rng);
        if (attempt % 2 == 1) {
            // Singular Gram: needed when the orthogonal complement of a
            // full-rank x is trivial (rank-one modules).
            x = random_projection(space.algebra, rng, true) * x;
        }
        const ModuleElement y = orthogonal_part(ModuleElement::random(space, rng), x);
        const double nx = module_norm(x);
        const double ny = module_norm(y);
        if (nx == 0.0 || ny == 0.0) {
            continue;
        }
        const double inner = inner_product(x, y).norm();
        if (inner > 1e-12 * nx * ny) {
            continue;
        }
        const ModuleElement tx = t.apply(x);
        const ModuleElement sy = s.apply(y);
        const double denom = module_norm(tx) * module_norm(sy);
        if (denom == 0.0) {
            continue;
        }
        const double image = inner_product(tx, sy).norm();
        if (image > witness_tol * denom) {
            return Witness{x, y, inner, image, image / denom};
        }
    }
    return std::nullopt;
}

Verdict decide_preserving(const ModuleOperator& t, const ModuleOperator& s, const DecideOptions& options) {
    require_pair(t, s);
    Verdict verdict;
    if (t.is_zero() || s.is_zero()) {
        const CentralElement zero = CentralElement::constant(t.domain().algebra, 0.0);
        verdict.kind = VerdictKind::ZeroPair;
        verdict.characterization = CharacterizationResult{zero, verify_characterization(t, s, zero), 0.0, {}, 0.0, {}};
        verdict.detail = t.is_zero() ? "T = 0" : "S = 0";
        return verdict;
    }

    const GammaEstimate est = estimate_gamma(t, s, ExtractOptions{options.seed, 3, options.tol});
    if (est.consistent) {
        const double residual = verify_characterization(t, s, est.gamma);
        if (residual <= est.tolerance) {
            verdict.kind = VerdictKind::Preserving;
            verdict.characterization =
                CharacterizationResult{est.gamma, residual, est.tolerance, est.samples, est.spread, est.least_squares};
            return verdict;
        }
        verdict.detail = "characterization residual " + std::to_string(residual) + " exceeds " +
                         std::to_string(est.tolerance);
    } else {
        verdict.detail = "cross-projection spread " + std::to_string(est.spread) + " exceeds " +
                         std::to_string(est.tolerance);
    }

    if (auto w = search_witness(t, s, options.seed, options.witness_budget, options.witness_tol)) {
        verdict.kind = VerdictKind::NotPreserving;
        verdict.witness = std::move(w);
    } else {
        verdict.kind = VerdictKind::Inconclusive;
        verdict.detail += "; no witness in " + std::to_string(options.witness_budget) + " attempts";
    }
    return verdict;
}

Verdict inner_product_comparison(const ModuleOperator& g, const DecideOptions& options) {
    if (!(g.domain() == g.codomain())) {
        throw Error(Errc::NotPositive, "G must map the module to itself");
    }
    const double norm = op_norm(g);
    if (max_coeff_diff(g, adjoint_op(g)) > psd_tolerance(norm)) {
        throw Error(Errc::NotPositive, "G is not self-adjoint");
    }
    for (std::size_t b = 0; b < g.domain().algebra.block_count(); ++b) {
        const Matrix m = g.block_matrix(b);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() <= 1e-10 * norm) {
            throw Error(Errc::NotPositive, "G is not positive invertible");
        }
    }
    return decide_preserving(g, ModuleOperator::identity(g.domain()), options);
}

}  // namespace orthopair
