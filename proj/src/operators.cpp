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

#include "orthopair/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace orthopair {

namespace {

void require_same_algebra_spaces(const ModuleSpace& a, const ModuleSpace& b) {
    if (!(a.algebra == b.algebra)) {
        throw Error(Errc::SpaceMismatch, "operator spaces use different algebras");
    }
}

std::size_t coeff_index(const ModuleSpace& codomain, int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(codomain.rank) + static_cast<std::size_t>(j);
}

// Singular values squared of the per-block matrices, from M M^*.
template <typename Reduce>
double block_singular_extreme(const ModuleOperator& t, Reduce pick, double init) {
    double acc = init;
    for (std::size_t b = 0; b < t.domain().algebra.block_count(); ++b) {
        const Matrix m = t.block_matrix(b);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(m * m.adjoint(), Eigen::EigenvaluesOnly);
        acc = pick(acc, solver.eigenvalues());
    }
    return acc;
}

}  // namespace

ModuleOperator::ModuleOperator(ModuleSpace domain, ModuleSpace codomain, std::vector<AlgebraElement> coeffs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), coeffs_(std::move(coeffs)) {
    require_same_algebra_spaces(domain_, codomain_);
    if (coeffs_.size() != static_cast<std::size_t>(domain_.rank) * static_cast<std::size_t>(codomain_.rank)) {
        throw Error(Errc::InvalidOperand, "coefficient array must be n x m");
    }
    for (const auto& c : coeffs_) {
        require_same_algebra(c.descriptor(), domain_.algebra);
    }
}

ModuleOperator ModuleOperator::identity(const ModuleSpace& space) {
    return central(space, CentralElement::constant(space.algebra, 1.0));
}

ModuleOperator ModuleOperator::zero(const ModuleSpace& domain, const ModuleSpace& codomain) {
    std::vector<AlgebraElement> coeffs(static_cast<std::size_t>(domain.rank * codomain.rank),
                                       AlgebraElement(domain.algebra));
    return {domain, codomain, std::move(coeffs)};
}

ModuleOperator ModuleOperator::central(const ModuleSpace& space, const CentralElement& gamma) {
    return right_multiplication(space, gamma.embed());
}

ModuleOperator ModuleOperator::right_multiplication(const ModuleSpace& space, const AlgebraElement& w) {
    ModuleOperator t = zero(space, space);
    for (int i = 0; i < space.rank; ++i) {
        t.coeffs_[coeff_index(space, i, i)] = w;
    }
    return t;
}

ModuleOperator ModuleOperator::slot_swap(const ModuleSpace& space, int i, int j) {
    if (i < 0 || j < 0 || i >= space.rank || j >= space.rank) {
        throw Error(Errc::InvalidArgument, "slot index out of range");
    }
    ModuleOperator t = zero(space, space);
    const auto one = AlgebraElement::identity(space.algebra);
    for (int s = 0; s < space.rank; ++s) {
        const int target = s == i ? j : (s == j ? i : s);
        t.coeffs_[coeff_index(space, s, target)] = one;
    }
    return t;
}

ModuleOperator ModuleOperator::random(const ModuleSpace& domain, const ModuleSpace& codomain, Rng& rng) {
    std::vector<AlgebraElement> coeffs;
    for (int i = 0; i < domain.rank * codomain.rank; ++i) {
        coeffs.push_back(AlgebraElement::random(domain.algebra, rng));
    }
    return {domain, codomain, std::move(coeffs)};
}

ModuleOperator ModuleOperator::random_invertible(const ModuleSpace& space, Rng& rng, double smin, double smax) {
    std::vector<Matrix> blocks;
    for (int k : space.algebra.block_sizes()) {
        const Eigen::Index d = static_cast<Eigen::Index>(k) * space.rank;
        Eigen::VectorXd s(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            s(i) = rng.uniform(smin, smax);
        }
        const Matrix u = rng.haar_unitary(d);
        const Matrix v = rng.haar_unitary(d);
        blocks.push_back(u * s.cast<Complex>().asDiagonal() * v);
    }
    return from_block_matrices(space, space, blocks);
}

ModuleOperator ModuleOperator::from_block_matrices(const ModuleSpace& domain, const ModuleSpace& codomain,
                                                   const std::vector<Matrix>& blocks) {
    ModuleOperator t = zero(domain, codomain);
    const auto& d = domain.algebra;
    if (blocks.size() != d.block_count()) {
        throw Error(Errc::InvalidOperand, "need one block matrix per algebra block");
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const int k = d.block_size(b);
        if (blocks[b].rows() != k * domain.rank || blocks[b].cols() != k * codomain.rank) {
            throw Error(Errc::InvalidOperand, "block matrix has wrong shape");
        }
        for (int i = 0; i < domain.rank; ++i) {
            for (int j = 0; j < codomain.rank; ++j) {
                t.coeffs_[coeff_index(codomain, i, j)].block(b) = blocks[b].block(i * k, j * k, k, k);
            }
        }
    }
    return t;
}

const AlgebraElement& ModuleOperator::coeff(int i, int j) const { return coeffs_.at(coeff_index(codomain_, i, j)); }

Matrix ModuleOperator::block_matrix(std::size_t block) const {
    const int k = domain_.algebra.block_size(block);
    Matrix m(k * domain_.rank, k * codomain_.rank);
    for (int i = 0; i < domain_.rank; ++i) {
        for (int j = 0; j < codomain_.rank; ++j) {
            m.block(i * k, j * k, k, k) = coeff(i, j).block(block);
        }
    }
    return m;
}

ModuleElement ModuleOperator::apply(const ModuleElement& x) const {
    require_same_space(x.space(), domain_);
    ModuleElement y(codomain_);
    for (int j = 0; j < codomain_.rank; ++j) {
        AlgebraElement& out = y.entry(static_cast<std::size_t>(j));
        for (int i = 0; i < domain_.rank; ++i) {
            const AlgebraElement& xi = x.entry(static_cast<std::size_t>(i));
            const AlgebraElement& c = coeff(i, j);
            for (std::size_t b = 0; b < out.blocks().size(); ++b) {
                out.block(b).noalias() += xi.block(b) * c.block(b);
            }
        }
    }
    return y;
}

bool ModuleOperator::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const AlgebraElement& c) { return c.is_zero(); });
}

ModuleOperator& ModuleOperator::operator+=(const ModuleOperator& other) {
    require_same_space(domain_, other.domain_);
    require_same_space(codomain_, other.codomain_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

ModuleOperator& ModuleOperator::operator-=(const ModuleOperator& other) {
    require_same_space(domain_, other.domain_);
    require_same_space(codomain_, other.codomain_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

ModuleOperator& ModuleOperator::operator*=(Complex s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

ModuleOperator operator*(const CentralElement& gamma, const ModuleOperator& t) {
    require_same_algebra(gamma.descriptor(), t.domain_.algebra);
    ModuleOperator out = t;
    const AlgebraElement g = gamma.embed();
    for (auto& c : out.coeffs_) {
        c = c * g;
    }
    return out;
}

ModuleElement apply(const ModuleOperator& t, const ModuleElement& x) { return t.apply(x); }

ModuleOperator compose(const ModuleOperator& t, const ModuleOperator& u) {
    require_same_space(u.codomain(), t.domain());
    // (T o U)(x)_j = sum_i x_i (sum_k U_ik T_kj).
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < t.domain().algebra.block_count(); ++b) {
        blocks.push_back(u.block_matrix(b) * t.block_matrix(b));
    }
    return ModuleOperator::from_block_matrices(u.domain(), t.codomain(), blocks);
}

ModuleOperator adjoint_op(const ModuleOperator& t) {
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < t.domain().algebra.block_count(); ++b) {
        blocks.push_back(t.block_matrix(b).adjoint());
    }
    return ModuleOperator::from_block_matrices(t.codomain(), t.domain(), blocks);
}

double op_norm(const ModuleOperator& t) {
    const double s2 = block_singular_extreme(
        t, [](double acc, const Eigen::VectorXd& ev) { return std::max(acc, ev.maxCoeff()); }, 0.0);
    return std::sqrt(std::max(s2, 0.0));
}

double smin(const ModuleOperator& t) {
    if (t.domain().rank > t.codomain().rank) {
        return 0.0;
    }
    const double s2 = block_singular_extreme(
        t, [](double acc, const Eigen::VectorXd& ev) { return std::min(acc, ev.minCoeff()); },
        std::numeric_limits<double>::infinity());
    return std::sqrt(std::max(s2, 0.0));
}

ModuleOperator invert(const ModuleOperator& t) {
    if (!(t.domain() == t.codomain())) {
        throw Error(Errc::Singular, "only endomorphisms of one module can be inverted");
    }
    const double top = op_norm(t);
    const double bottom = smin(t);
    if (top == 0.0 || bottom < 1e-10 * top) {
        throw Error(Errc::Singular, "smallest singular value " + std::to_string(bottom) + " vs norm " +
                                        std::to_string(top));
    }
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < t.domain().algebra.block_count(); ++b) {
        blocks.push_back(t.block_matrix(b).inverse());
    }
    return ModuleOperator::from_block_matrices(t.domain(), t.codomain(), blocks);
}

double max_coeff_diff(const ModuleOperator& t, const ModuleOperator& u) {
    require_same_space(t.domain(), u.domain());
    require_same_space(t.codomain(), u.codomain());
    double m = 0.0;
    for (std::size_t i = 0; i < t.coeffs().size(); ++i) {
        m = std::max(m, max_abs_diff(t.coeffs()[i], u.coeffs()[i]));
    }
    return m;
}

ModuleOperator random_unitary_module_op(const ModuleSpace& space, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Matrix> blocks;
    for (int k : space.algebra.block_sizes()) {
        blocks.push_back(rng.haar_unitary(static_cast<Eigen::Index>(k) * space.rank));
    }
    return ModuleOperator::from_block_matrices(space, space, blocks);
}

GeneralLinearMap::GeneralLinearMap(ModuleSpace domain, ModuleSpace codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (static_cast<std::size_t>(matrix_.rows()) != codomain_.dimension() ||
        static_cast<std::size_t>(matrix_.cols()) != domain_.dimension()) {
        throw Error(Errc::InvalidOperand, "matrix shape does not match the spaces");
    }
}

ModuleElement GeneralLinearMap::apply(const ModuleElement& x) const {
    require_same_space(x.space(), domain_);
    return ModuleElement::from_coordinates(codomain_, matrix_ * x.coordinates());
}

GeneralLinearMap realize(const ModuleOperator& t) {
    const auto cols = static_cast<Eigen::Index>(t.domain().dimension());
    Matrix m(static_cast<Eigen::Index>(t.codomain().dimension()), cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        m.col(c) = t.apply(ModuleElement::basis_element(t.domain(), static_cast<std::size_t>(c))).coordinates();
    }
    return {t.domain(), t.codomain(), std::move(m)};
}

LocalityResult is_local(const GeneralLinearMap& l, int trials, std::uint64_t seed, double tol) {
    LocalityResult result;
    const auto& algebra = l.domain().algebra;
    const auto one = AlgebraElement::identity(algebra);
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const AlgebraElement b = AlgebraElement::random(algebra, rng);
        const AlgebraElement p = random_projection(algebra, rng, true);
        AlgebraElement a = b * (one - p);
        for (std::size_t i = 0; i < algebra.block_count(); ++i) {
            // p = 1 in this block: what is left is rounding noise.
            if (a.block(i).norm() <= 1e-12 * b.block(i).norm()) {
                a.block(i).setZero();
            }
        }
        if (a.is_zero()) {
            continue;
        }
        const AlgebraElement kernel = one - pseudo_inverse(a) * a;
        const ModuleElement x = kernel * ModuleElement::random(l.domain(), rng);
        const ModuleElement lx = l.apply(x);
        const double scale = a.norm() * module_norm(lx);
        if (scale == 0.0) {
            continue;
        }
        const double ratio = module_norm(a * lx) / scale;
        if (ratio > result.worst_ratio) {
            result.worst_ratio = ratio;
        }
        if (ratio > tol && result.local) {
            result.local = false;
            result.witness_a = a;
            result.witness_x = x;
        }
    }
    return result;
}

ALinearityResult is_a_linear(const GeneralLinearMap& l, int trials, std::uint64_t seed, double tol) {
    ALinearityResult result;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const AlgebraElement a = AlgebraElement::random(l.domain().algebra, rng);
        const ModuleElement x = ModuleElement::random(l.domain(), rng);
        const ModuleElement lhs = l.apply(a * x);
        const ModuleElement rhs = a * l.apply(x);
        const double scale = module_norm(lhs) + module_norm(rhs);
        if (scale == 0.0) {
            continue;
        }
        const double ratio = module_norm(lhs - rhs) / scale;
        result.worst_ratio = std::max(result.worst_ratio, ratio);
        if (ratio > tol && result.a_linear) {
            result.a_linear = false;
            result.witness_a = a;
            result.witness_x = x;
        }
    }
    return result;
}

NotALinearError::NotALinearError(std::size_t basis_index, double discrepancy)
    : Error(Errc::NotALinear, "map disagrees with its A-linear promotion at basis element " +
                                  std::to_string(basis_index) + " (discrepancy " + std::to_string(discrepancy) +
                                  ")"),
      basis_index_(basis_index),
      discrepancy_(discrepancy) {}

ModuleOperator promote(const GeneralLinearMap& l) {
    const ModuleSpace& dom = l.domain();
    const ModuleSpace& cod = l.codomain();
    require_same_algebra_spaces(dom, cod);
    std::vector<AlgebraElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(dom.rank * cod.rank));
    for (int i = 0; i < dom.rank; ++i) {
        const ModuleElement image = l.apply(ModuleElement::generator(dom, i));
        for (int j = 0; j < cod.rank; ++j) {
            coeffs.push_back(image.entry(static_cast<std::size_t>(j)));
        }
    }
    ModuleOperator t(dom, cod, std::move(coeffs));
    const Matrix diff = realize(t).matrix() - l.matrix();
    const double scale = std::max(1.0, l.matrix().cwiseAbs().maxCoeff());
    Eigen::Index worst_col = 0;
    double worst = 0.0;
    for (Eigen::Index c = 0; c < diff.cols(); ++c) {
        const double v = diff.col(c).cwiseAbs().maxCoeff();
        if (v > worst) {
            worst = v;
            worst_col = c;
        }
    }
    if (worst > 1e-12 * scale) {
        throw NotALinearError(static_cast<std::size_t>(worst_col), worst);
    }
    return t;
}

}  // namespace orthopair
