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

#include "orthopair/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

namespace orthopair {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kRecoveryTol = 1e-8;
constexpr int kPerturbationPairs = 200;
constexpr int kSymmetriesPerCase = 20;
constexpr int kProjectionsPerCase = 50;
constexpr int kLocalityTrials = 20;

void validate_theta(double theta, const char* name) {
    if (!(theta >= 0.0 && theta < 1.0)) {
        throw Error(Errc::InvalidTheta, std::string(name) + " must lie in [0, 1)");
    }
}

double max_relative_error(const CentralElement& got, const CentralElement& want) {
    double worst = 0.0;
    for (std::size_t b = 0; b < want.scalars().size(); ++b) {
        worst = std::max(worst, std::abs(got[b] - want[b]) / std::abs(want[b]));
    }
    return worst;
}

double max_abs_error(const CentralElement& got, const CentralElement& want) {
    double worst = 0.0;
    for (std::size_t b = 0; b < want.scalars().size(); ++b) {
        worst = std::max(worst, std::abs(got[b] - want[b]));
    }
    return worst;
}

double basis_deviation(const ModuleOperator& t, const CentralElement& gamma) {
    const AlgebraElement g = gamma.embed();
    double worst = 0.0;
    for (std::size_t i = 0; i < t.domain().dimension(); ++i) {
        const ModuleElement b = ModuleElement::basis_element(t.domain(), i);
        worst = std::max(worst, module_norm(t.apply(b) - g * b));
    }
    return worst;
}

double order_gap(const AlgebraElement& lower, const AlgebraElement& upper, double scale) {
    return std::max(0.0, -min_eigenvalue(upper - lower)) / scale;
}

/// x -> x a in every slot.
ModuleElement right_multiply(const ModuleElement& x, const AlgebraElement& a) {
    std::vector<AlgebraElement> entries;
    for (const AlgebraElement& e : x.entries()) {
        entries.push_back(e * a);
    }
    return {x.space(), std::move(entries)};
}

Json pair_payload(const ModuleOperator& t, const ModuleOperator& s) {
    Json j = Json::object();
    j["T"] = to_json(t);
    j["S"] = to_json(s);
    return j;
}

Json elements_payload(const ModuleElement& x, const ModuleElement& y) {
    Json j = Json::object();
    j["x"] = to_json(x);
    j["y"] = to_json(y);
    return j;
}

Json with(Json j, const char* key, Json value) {
    j[key] = std::move(value);
    return j;
}

Json verdict_payload(const ModuleOperator& t, const ModuleOperator& s, const Verdict& v) {
    return with(pair_payload(t, s), "verdict", to_json(v));
}

bool confirmed_not_preserving(const ModuleOperator& t, const ModuleOperator& s, const Verdict& v) {
    return v.kind == VerdictKind::NotPreserving && v.witness && confirm_witness(t, s, *v.witness);
}

// ---------------------------------------------------------------------------

using SetupFn = void (*)(const SuiteConfig&, SuiteReport&);
using CaseFn = void (*)(const SuiteConfig&, const ModuleSpace&, Rng&, CaseRecorder&);

struct SuiteDef {
    const char* name;
    SetupFn setup;
    CaseFn run_case;
};

void default_space(const SuiteConfig& config, SuiteReport& report) {
    report.space = ModuleSpace(config.algebra, config.rank);
}

bool is_commutative(const AlgebraDescriptor& d) {
    const auto& sizes = d.block_sizes();
    return std::all_of(sizes.begin(), sizes.end(), [](int k) { return k == 1; });
}

// Orthogonality equivalences: forward direction on constructed orthogonal
// pairs, the witness a = <x, y> on non-orthogonal ones, the paired-operator
// form on a preserving pair, and the scalar-lambda form on M_2.

void lemma_setup(const SuiteConfig& config, SuiteReport& report) {
    default_space(config, report);
    report.parameters.emplace_back("lambda_grid_points", lambda_grid().size());
    report.parameters.emplace_back("algebra_samples", LemmaOptions{}.sample_count);
    report.notes.push_back(
        "the scalar-lambda characterization |x| <= |x + lambda y| on M_2 is checked empirically only; "
        "the converse count reports how many non-orthogonal pairs the lambda grid exposes");
}

void lemma_case(const SuiteConfig& config, const ModuleSpace& space, Rng& rng, CaseRecorder& rec) {
    static constexpr std::array<const char*, 6> kForward = {
        "forward_orthogonal",      "forward_abs_symmetric_scalar", "forward_abs_symmetric_algebra",
        "forward_order_gram_scalar", "forward_order_gram_algebra",  "forward_order_abs_algebra"};
    LemmaOptions options;
    options.seed = rng.next_seed();
    options.comparison = config.mutate ? AbsComparison::StrictEigenvalues : AbsComparison::PsdTolerance;

    {
        const auto [x, y] = random_orthogonal_pair(space, rng);
        const LemmaReport r = lemma_forward(x, y, options);
        for (std::size_t k = 0; k < kForward.size(); ++k) {
            rec.check_le(kForward[k], r.worst[k], 1e-9, [&] { return elements_payload(x, y); });
        }
    }

    {
        const ModuleElement x = ModuleElement::random(space, rng);
        const ModuleElement y = ModuleElement::random(space, rng);
        const AlgebraElement c = inner_product(x, y);
        const double expected = 4.0 * c.norm() * c.norm();
        const double gap = witness_gap(x, y, lemma_witness(x, y)).norm();
        rec.check_le("witness_gap_law", std::abs(gap - expected) / expected, 1e-8,
                     [&] { return elements_payload(x, y); });
        LemmaOptions plain = options;
        plain.comparison = AbsComparison::PsdTolerance;
        rec.check("converse_detected", !lemma_forward(x, y, plain).all(), [&] { return elements_payload(x, y); });
    }

    {
        const PairInstance pair = make_preserving_pair(space, rng);
        const auto [x, y] = random_orthogonal_pair(space, rng);
        AlgebraElement a = AlgebraElement::random(space.algebra, rng);
        const ModuleElement tx = pair.t.apply(x);
        const ModuleElement sy = pair.s.apply(y);
        const ModuleElement plus = tx + a * sy;
        const ModuleElement minus = tx - a * sy;
        const double scale = module_norm(tx) + a.norm() * module_norm(sy);
        const double d = distance(abs_value(minus), abs_value(plus)) / scale;
        rec.check_le("paired_abs_symmetric", d, 1e-9, [&] {
            return with(with(pair_payload(pair.t, pair.s), "xy", elements_payload(x, y)), "a", to_json(a));
        });
    }

    {
        const ModuleSpace m2(AlgebraDescriptor({2}), 1);
        const AlgebraElement q = minimal_projection(m2.algebra, 0, rng.unit_vector(2));
        const AlgebraElement q_perp = AlgebraElement::identity(m2.algebra) - q;
        const ModuleElement x = right_multiply(ModuleElement::random(m2, rng), q);
        const ModuleElement y = right_multiply(ModuleElement::random(m2, rng), q_perp);
        const AlgebraElement abs_x = abs_value(x);
        double worst = 0.0;
        for (Complex lambda : lambda_grid()) {
            const double scale = module_norm(x) + std::abs(lambda) * module_norm(y);
            worst = std::max(worst, order_gap(abs_x, abs_value(x + lambda * y), scale));
        }
        rec.check_le("scalar_lambda_orthogonal_m2", worst, 1e-9, [&] { return elements_payload(x, y); });

        const ModuleElement u = ModuleElement::random(m2, rng);
        const ModuleElement v = ModuleElement::random(m2, rng);
        const AlgebraElement abs_u = abs_value(u);
        bool exposed = false;
        for (Complex lambda : lambda_grid()) {
            const double scale = module_norm(u) + std::abs(lambda) * module_norm(v);
            exposed = exposed || order_gap(abs_u, abs_value(u + lambda * v), scale) > 1e-9;
        }
        rec.tally("scalar_lambda_converse_exposed_m2", exposed);
    }
}

// Identity pairing: T preserving against S = id is a central multiple of id.

void identity_setup(const SuiteConfig& config, SuiteReport& report) {
    default_space(config, report);
    if (is_commutative(config.algebra)) {
        report.notes.push_back("commutative algebra: every coefficient twist is central, twisted check skipped");
    }
}

void identity_case(const SuiteConfig& config, const ModuleSpace& space, Rng& rng, CaseRecorder& rec) {
    const CentralElement gamma0 = CentralElement::random(space.algebra, rng);
    const ModuleOperator twist = coefficient_twist(space, rng);
    ModuleOperator t = ModuleOperator::central(space, gamma0);
    if (config.mutate) {
        t = compose(t, twist);
    }
    const ModuleOperator id = ModuleOperator::identity(space);
    const Verdict v = decide_preserving(t, id, {rng.next_seed()});
    const bool preserving = v.kind == VerdictKind::Preserving;
    rec.check("verdict_preserving", preserving, [&] { return verdict_payload(t, id, v); });
    if (preserving) {
        const CentralElement& gamma = v.characterization->gamma;
        rec.check_le("gamma_recovery", max_relative_error(gamma, gamma0), 1e-9,
                     [&] { return verdict_payload(t, id, v); });
        rec.check_le("identity_law", basis_deviation(t, gamma), kIdentityTol,
                     [&] { return verdict_payload(t, id, v); });
    }
    rec.check_le("identity_law_constructed", basis_deviation(t, gamma0), 1e-10,
                 [&] { return with(pair_payload(t, id), "gamma", to_json(gamma0)); });

    if (is_commutative(space.algebra)) {
        return;
    }
    const ModuleOperator twisted = compose(ModuleOperator::central(space, gamma0), twist);
    const Verdict w = decide_preserving(twisted, id, {rng.next_seed()});
    rec.check("twisted_not_preserving", confirmed_not_preserving(twisted, id, w),
              [&] { return verdict_payload(twisted, id, w); });
}

// Invertible pairs: T = gamma (S*)^{-1} and the positive case T = S.

void invertible_setup(const SuiteConfig& config, SuiteReport& report) {
    default_space(config, report);
    report.notes.push_back(
        "construction T = gamma (S*)^{-1} gives <Tx, Sy> = gamma <x, y>, S*T = TS* = gamma id and "
        "S = gamma* (T*)^{-1} under an inner product linear in its first variable");
}

void invertible_case(const SuiteConfig& config, const ModuleSpace& space, Rng& rng, CaseRecorder& rec) {
    const bool trivial = rec.case_index() == 0;
    const ModuleOperator s = trivial ? random_unitary_module_op(space, rng.next_seed())
                                     : ModuleOperator::random_invertible(space, rng);
    const CentralElement gamma =
        trivial ? CentralElement::constant(space.algebra, 1.0) : CentralElement::random(space.algebra, rng);
    ModuleOperator t = gamma * invert(adjoint_op(s));
    if (config.mutate) {
        t = compose(t, coefficient_twist(space, rng));
    }
    const ModuleOperator g = ModuleOperator::central(space, gamma);
    auto payload = [&] { return with(pair_payload(t, s), "gamma", to_json(gamma)); };

    if (trivial) {
        rec.check_le("unit_gamma_unitary_s_gives_t_equal_s", max_coeff_diff(t, s), 1e-12, payload);
    }
    rec.check_le("adjoint_left", max_coeff_diff(compose(adjoint_op(s), t), g), kIdentityTol, payload);
    rec.check_le("adjoint_right", max_coeff_diff(compose(t, adjoint_op(s)), g), kIdentityTol, payload);
    rec.check_le("inverse_formula", max_coeff_diff(s, gamma.conj() * invert(adjoint_op(t))), kIdentityTol, payload);

    const GammaEstimate est = estimate_gamma(t, s, {rng.next_seed()});
    rec.check_le("gamma_recovery", max_relative_error(est.gamma, gamma), kRecoveryTol, payload);
    rec.check_le("characterization_residual", verify_characterization(t, s, est.gamma) / (op_norm(t) * op_norm(s)),
                 kRecoveryTol, payload);

    // Positive branch: T = S = gamma0^{1/2} U with U unitary, so TT* = gamma0.
    std::vector<Complex> positive;
    for (std::size_t b = 0; b < space.algebra.block_count(); ++b) {
        positive.emplace_back(rng.uniform(0.5, 2.0), 0.0);
    }
    const CentralElement gamma0(space.algebra, positive);
    const ModuleOperator u0 = random_unitary_module_op(space, rng.next_seed());
    const ModuleOperator p = gamma0.sqrt() * u0;
    auto polar_payload = [&] { return with(with(Json::object(), "T", to_json(p)), "gamma", to_json(gamma0)); };
    rec.check_le("polar_gram", max_coeff_diff(compose(p, adjoint_op(p)), ModuleOperator::central(space, gamma0)),
                 kIdentityTol, polar_payload);
    const GammaEstimate pe = estimate_gamma(p, p, {rng.next_seed()});
    double imag = 0.0;
    double min_real = pe.gamma[0].real();
    for (Complex z : pe.gamma.scalars()) {
        imag = std::max(imag, std::abs(z.imag()));
        min_real = std::min(min_real, z.real());
    }
    rec.check_le("polar_gamma_imaginary", imag, 1e-10, polar_payload);
    rec.check("polar_gamma_positive", min_real > 0.0, polar_payload);
    rec.check_le("polar_gamma_recovery", max_relative_error(pe.gamma, gamma0), kRecoveryTol, polar_payload);
    if (min_real > 0.0) {
        const ModuleOperator u = pe.gamma.sqrt().inverse() * p;
        const ModuleOperator id = ModuleOperator::identity(space);
        const double dev = std::max(max_coeff_diff(compose(adjoint_op(u), u), id),
                                    max_coeff_diff(compose(u, adjoint_op(u)), id));
        rec.check_le("polar_unitary", dev, kIdentityTol, polar_payload);
    }
}

// Co-isometries U = gamma V with unitary central gamma.

void isometry_setup(const SuiteConfig& config, SuiteReport& report) {
    default_space(config, report);
    report.notes.push_back(
        "UU* = VV* = id forces U and V to be unitary on A^n, so the orthogonal-ranges alternative cannot occur; "
        "it is documented here and not asserted");
}

void isometry_case(const SuiteConfig& config, const ModuleSpace& space, Rng& rng, CaseRecorder& rec) {
    const ModuleOperator v = random_unitary_module_op(space, rng.next_seed());
    CentralElement gamma = CentralElement::random(space.algebra, rng, 1.0, 1.0);
    if (rec.case_index() == 0) {
        gamma = CentralElement::constant(space.algebra, 1.0);
    } else if (rec.case_index() == 1) {
        std::vector<Complex> powers;
        Complex z{0.0, 1.0};
        for (std::size_t b = 0; b < space.algebra.block_count(); ++b, z *= Complex{0.0, 1.0}) {
            powers.push_back(z);
        }
        gamma = CentralElement(space.algebra, powers);
    }
    ModuleOperator u = gamma * v;
    if (config.mutate) {
        u = compose(u, coefficient_twist(space, rng));
    }
    const ModuleOperator id = ModuleOperator::identity(space);
    rec.check_le("co_isometry", std::max(max_coeff_diff(compose(u, adjoint_op(u)), id),
                                         max_coeff_diff(compose(v, adjoint_op(v)), id)),
                 kIdentityTol, [&] { return pair_payload(u, v); });

    const Verdict verdict = decide_preserving(u, v, {rng.next_seed()});
    const bool preserving = verdict.kind == VerdictKind::Preserving;
    rec.check("verdict_preserving", preserving, [&] { return verdict_payload(u, v, verdict); });
    if (preserving) {
        const CentralElement& got = verdict.characterization->gamma;
        double unimodular = 0.0;
        for (Complex z : got.scalars()) {
            unimodular = std::max(unimodular, std::abs(std::abs(z) - 1.0));
        }
        rec.check_le("gamma_recovery", max_abs_error(got, gamma), 1e-9,
                     [&] { return verdict_payload(u, v, verdict); });
        rec.check_le("gamma_unimodular", unimodular, 1e-10, [&] { return verdict_payload(u, v, verdict); });
    }

    const ModuleOperator other = random_unitary_module_op(space, rng.next_seed());
    const Verdict independent = decide_preserving(other, v, {rng.next_seed()});
    rec.check("independent_not_preserving", confirmed_not_preserving(other, v, independent),
              [&] { return verdict_payload(other, v, independent); });
}

// Stability under perturbation of a preserving pair.

void perturbation_setup(const SuiteConfig& config, SuiteReport& report) {
    validate_theta(config.theta1, "theta1");
    validate_theta(config.theta2, "theta2");
    default_space(config, report);
    report.parameters.emplace_back("theta1", config.theta1);
    report.parameters.emplace_back("theta2", config.theta2);
    report.parameters.emplace_back("epsilon", perturbation_epsilon(config.theta1, config.theta2));
    report.parameters.emplace_back("pairs_per_case", kPerturbationPairs);
}

void perturbation_case(const SuiteConfig& config, const ModuleSpace& space, Rng& rng, CaseRecorder& rec) {
    PairInstance base = make_preserving_pair(space, rng);
    if (config.mutate) {
        base.t = compose(base.t, coefficient_twist(space, rng));
    }
    const ModuleOperator t = perturb(base.t, config.theta1, rng);
    const ModuleOperator s = perturb(base.s, config.theta2, rng);
    auto payload = [&] {
        Json j = pair_payload(t, s);
        j["T0"] = to_json(base.t);
        j["S0"] = to_json(base.s);
        return j;
    };
    rec.check_le("hypothesis_t", op_norm(t - base.t) / smin(t), config.theta1 + 1e-12, payload);
    rec.check_le("hypothesis_s", op_norm(s - base.s) / smin(s), config.theta2 + 1e-12, payload);

    const double epsilon = perturbation_epsilon(config.theta1, config.theta2);
    const double limit = std::max(epsilon, 1e-9);
    for (int k = 0; k < kPerturbationPairs; ++k) {
        const auto [x, y] = random_orthogonal_pair(space, rng);
        const ModuleElement tx = t.apply(x);
        const ModuleElement sy = s.apply(y);
        const double ratio = inner_product(tx, sy).norm() / (module_norm(tx) * module_norm(sy));
        rec.check_le("epsilon_bound", ratio, limit, [&] { return with(payload(), "xy", elements_payload(x, y)); });
    }
}

// The real-rank-zero argument, step by step.

void real_rank_zero_setup(const SuiteConfig& config, SuiteReport& report) {
    default_space(config, report);
    report.parameters.emplace_back("symmetries_per_case", kSymmetriesPerCase);
    report.notes.push_back("finite-dimensional algebras have real rank zero");
}

void real_rank_zero_case(const SuiteConfig& config, const ModuleSpace& space, Rng& rng, CaseRecorder& rec) {
    const ModuleOperator s = random_unitary_module_op(space, rng.next_seed());
    std::vector<Complex> real;
    for (std::size_t b = 0; b < space.algebra.block_count(); ++b) {
        const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        real.emplace_back(sign * rng.uniform(0.5, 2.0), 0.0);
    }
    const CentralElement gamma0(space.algebra, real);
    ModuleOperator t = gamma0 * s;
    if (config.mutate) {
        t = compose(t, coefficient_twist(space, rng));
    }
    const double scale = op_norm(t) * op_norm(s);

    const ModuleElement z0 = ModuleElement::random(space, rng);
    const ModuleElement z = inverse(abs_value(z0)) * z0;
    auto payload = [&] { return with(with(pair_payload(t, s), "z", to_json(z)), "gamma", to_json(gamma0)); };
    const AlgebraElement one = AlgebraElement::identity(space.algebra);
    rec.check_le("normalization", distance(inner_product(z, z), one), 1e-10, payload);

    const AlgebraElement g = inner_product(t.apply(z), s.apply(z));
    rec.check_le("gamma_self_adjoint", distance(g, g.adjoint()), 1e-10, payload);
    rec.check_le("gamma_central", distance(g, central_part(g).embed()), 1e-10, payload);
    rec.check_le("gamma_matches_construction", max_relative_error(central_part(g), gamma0), 1e-10, payload);

    for (int k = 0; k < kSymmetriesPerCase; ++k) {
        const AlgebraElement u = random_symmetry(space.algebra, rng.next_seed());
        const ModuleElement plus = z + u * z;
        const ModuleElement minus = z - u * z;
        auto sym_payload = [&] { return with(payload(), "u", to_json(u)); };
        rec.check_le("symmetry_orthogonal_pair", inner_product(plus, minus).norm(), 1e-11, sym_payload);
        rec.check_le("preserved_on_symmetry_pair", inner_product(t.apply(plus), s.apply(minus)).norm() / scale,
                     1e-10, sym_payload);
        rec.check_le("symmetry_identity", (g + u * g - g * u - u * g * u).norm(), 1e-10, sym_payload);
        rec.check_le("commutes_with_symmetry", (g * u - u * g).norm(), 1e-11, sym_payload);
    }

    rec.check_le("characterization", verify_characterization(t, s, central_part(g)) / scale, 1e-10, payload);
}

// Local maps on a single-block algebra.

void local_setup(const SuiteConfig& config, SuiteReport& report) {
    report.space = ModuleSpace(AlgebraDescriptor({config.algebra.block_size(0)}), config.rank);
    report.parameters.emplace_back("projections_per_case", kProjectionsPerCase);
    report.parameters.emplace_back("locality_trials", kLocalityTrials);
    if (config.algebra.block_count() > 1) {
        report.notes.push_back("local maps need a single-block algebra; ran on M_" +
                               std::to_string(config.algebra.block_size(0)) + " with the configured rank");
    }
    report.notes.push_back("at finite dimension locality on projections already forces A-linearity");
    if (report.space.algebra.block_size(0) == 1) {
        report.notes.push_back("A = C: every linear map is A-linear, non-local checks skipped");
    }
}

void local_case(const SuiteConfig& config, const ModuleSpace& space, Rng& rng, CaseRecorder& rec) {
    {
        const CentralElement gamma0 = CentralElement::random(space.algebra, rng);
        const GeneralLinearMap l = realize(ModuleOperator::central(space, gamma0));
        const LocalityResult loc = is_local(l, kLocalityTrials, rng.next_seed());
        auto payload = [&] { return with(with(Json::object(), "L", to_json(l)), "gamma", to_json(gamma0)); };
        rec.check("scalar_map_local", loc.local, payload);
        const ModuleOperator promoted = promote(l);
        const Verdict v = decide_preserving(promoted, ModuleOperator::identity(space), {rng.next_seed()});
        const bool preserving = v.kind == VerdictKind::Preserving;
        rec.check("scalar_map_preserving", preserving, payload);
        if (preserving) {
            rec.check_le("scalar_map_gamma", max_relative_error(v.characterization->gamma, gamma0), 1e-9, payload);
        }
    }

    {
        const ModuleOperator t = ModuleOperator::random(space, space, rng);
        GeneralLinearMap l = realize(t);
        if (config.mutate) {
            const auto dim = static_cast<Eigen::Index>(space.dimension());
            const Vector a = rng.gaussian_vector(dim);
            const Vector b = rng.gaussian_vector(dim);
            l = GeneralLinearMap(space, space, l.matrix() + 0.5 * a * b.adjoint());
        }
        auto payload = [&] { return with(with(Json::object(), "T", to_json(t)), "L", to_json(l)); };
        const double norm = op_norm(t);
        double worst = 0.0;
        for (int k = 0; k < kProjectionsPerCase; ++k) {
            const AlgebraElement p = random_projection(space.algebra, rng, true);
            const ModuleElement x = ModuleElement::random(space, rng);
            worst = std::max(worst, module_norm(p * l.apply(x) - l.apply(p * x)) / (norm * module_norm(x)));
        }
        rec.check_le("projection_commutation", worst, 1e-12, payload);
        rec.check("module_map_local", is_local(l, kLocalityTrials, rng.next_seed()).local, payload);
        double roundtrip = 0.0;
        try {
            roundtrip = max_coeff_diff(promote(l), t) / (1.0 + norm);
        } catch (const NotALinearError& e) {
            roundtrip = e.discrepancy();
        }
        rec.check_le("promote_roundtrip", roundtrip, 1e-12, payload);
    }

    if (space.algebra.block_size(0) > 1) {
        const auto dim = static_cast<Eigen::Index>(space.dimension());
        const Vector a = rng.gaussian_vector(dim);
        const Vector b = rng.gaussian_vector(dim);
        const GeneralLinearMap l(space, space, a * b.adjoint());
        auto payload = [&] { return with(Json::object(), "L", to_json(l)); };
        rec.check("functional_not_local", !is_local(l, kLocalityTrials, rng.next_seed()).local, payload);
        bool rejected = false;
        try {
            promote(l);
        } catch (const NotALinearError&) {
            rejected = true;
        }
        rec.check("functional_not_promotable", rejected, payload);
    }
}

constexpr std::array<SuiteDef, 7> kSuites = {{
    {"lemma_equivalences", lemma_setup, lemma_case},
    {"identity_pairing", identity_setup, identity_case},
    {"invertible_pair", invertible_setup, invertible_case},
    {"isometry_pair", isometry_setup, isometry_case},
    {"perturbation", perturbation_setup, perturbation_case},
    {"real_rank_zero", real_rank_zero_setup, real_rank_zero_case},
    {"local_maps", local_setup, local_case},
}};

const SuiteDef& find_suite(std::string_view name) {
    for (const SuiteDef& def : kSuites) {
        if (name == def.name) {
            return def;
        }
    }
    std::string known;
    for (const SuiteDef& def : kSuites) {
        known += (known.empty() ? "" : ", ") + std::string(def.name);
    }
    throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(name) + "'; known suites: " + known);
}

std::uint64_t suite_stream(const SuiteConfig& config, const SuiteDef& def) {
    return derive_seed(config.seed, static_cast<std::uint64_t>(&def - kSuites.data()));
}

void run_one(const SuiteDef& def, const SuiteConfig& config, std::size_t index, SuiteReport& report) {
    const std::uint64_t case_seed = derive_seed(suite_stream(config, def), index);
    CaseRecorder rec(report, index, case_seed);
    Rng rng(case_seed);
    try {
        def.run_case(config, report.space, rng, rec);
    } catch (const Error& e) {
        rec.check("no_error", false, [&] { return with(Json::object(), "error", e.what()); });
    }
}

SuiteReport run(const SuiteDef& def, const SuiteConfig& config, std::optional<std::size_t> only) {
    if (config.cases < 0) {
        throw Error(Errc::InvalidArgument, "cases must be non-negative");
    }
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = def.name;
    report.config = config;
    def.setup(config, report);
    if (only) {
        run_one(def, config, *only, report);
        report.cases_run = 1;
    } else {
        for (int i = 0; i < config.cases; ++i) {
            run_one(def, config, static_cast<std::size_t>(i), report);
        }
        report.cases_run = static_cast<std::size_t>(config.cases);
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

PairInstance make_preserving_pair(const ModuleSpace& space, Rng& rng) {
    ModuleOperator s = ModuleOperator::random_invertible(space, rng);
    CentralElement gamma = CentralElement::random(space.algebra, rng);
    ModuleOperator t = gamma * invert(adjoint_op(s));
    return {std::move(t), std::move(s), std::move(gamma)};
}

ModuleOperator coefficient_twist(const ModuleSpace& space, Rng& rng) {
    const AlgebraElement g = AlgebraElement::random(space.algebra, rng);
    const AlgebraElement w = AlgebraElement::identity(space.algebra) + Complex(0.5 / g.norm()) * g;
    return ModuleOperator::right_multiplication(space, w);
}

PairInstance make_corrupted_pair(const ModuleSpace& space, Rng& rng) {
    PairInstance pair = make_preserving_pair(space, rng);
    pair.t = compose(pair.t, coefficient_twist(space, rng));
    pair.gamma.reset();
    return pair;
}

PairInstance make_random_pair(const ModuleSpace& space, Rng& rng) {
    ModuleOperator t = ModuleOperator::random_invertible(space, rng);
    ModuleOperator s = ModuleOperator::random_invertible(space, rng);
    return {std::move(t), std::move(s), std::nullopt};
}

PairInstance make_identity_pair(const ModuleSpace& space) {
    return {ModuleOperator::identity(space), ModuleOperator::identity(space),
            CentralElement::constant(space.algebra, 1.0)};
}

ModuleOperator perturb(const ModuleOperator& t0, double theta, Rng& rng) {
    validate_theta(theta, "theta");
    const ModuleOperator d = ModuleOperator::random(t0.domain(), t0.codomain(), rng);
    if (theta == 0.0) {
        return t0;
    }
    // |D'| <= theta smin(T0) / (1 + theta) gives |D'| <= theta smin(T0 + D').
    const double scale = theta * smin(t0) / (op_norm(d) * (1.0 + theta));
    return t0 + Complex(scale) * d;
}

PairInstance make_perturbed_pair(const ModuleSpace& space, Rng& rng, double theta1, double theta2) {
    validate_theta(theta1, "theta1");
    validate_theta(theta2, "theta2");
    PairInstance base = make_preserving_pair(space, rng);
    ModuleOperator t = perturb(base.t, theta1, rng);
    ModuleOperator s = perturb(base.s, theta2, rng);
    return {std::move(t), std::move(s), std::nullopt};
}

double perturbation_epsilon(double theta1, double theta2) {
    return theta1 * theta2 + theta1 * (theta2 + 1.0) + (theta1 + 1.0) * theta2;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteDef& def : kSuites) {
            out.emplace_back(def.name);
        }
        return out;
    }();
    return names;
}

bool is_suite_name(std::string_view name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
    return run(find_suite(name), config, std::nullopt);
}

SuiteReport replay_case(std::string_view name, const SuiteConfig& config, std::size_t case_index) {
    return run(find_suite(name), config, case_index);
}

SuiteReport suite_lemma_equivalences(const SuiteConfig& config) { return run_suite("lemma_equivalences", config); }
SuiteReport suite_identity_pairing(const SuiteConfig& config) { return run_suite("identity_pairing", config); }
SuiteReport suite_invertible_pair(const SuiteConfig& config) { return run_suite("invertible_pair", config); }
SuiteReport suite_isometry_pair(const SuiteConfig& config) { return run_suite("isometry_pair", config); }
SuiteReport suite_perturbation(const SuiteConfig& config) { return run_suite("perturbation", config); }
SuiteReport suite_real_rank_zero(const SuiteConfig& config) { return run_suite("real_rank_zero", config); }
SuiteReport suite_local_maps(const SuiteConfig& config) { return run_suite("local_maps", config); }

}  // namespace orthopair
