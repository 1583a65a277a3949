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

#include "orthopair/module.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace orthopair {

ModuleSpace::ModuleSpace(AlgebraDescriptor algebra_, int rank_) : algebra(std::move(algebra_)), rank(rank_) {
    if (rank < 1) {
        throw Error(Errc::InvalidArgument, "module rank must be positive");
    }
}

void require_same_space(const ModuleSpace& a, const ModuleSpace& b) {
    if (!(a == b)) {
        throw Error(Errc::SpaceMismatch, "module elements live in different spaces");
    }
}

ModuleElement::ModuleElement(ModuleSpace space) : space_(std::move(space)) {
    entries_.assign(static_cast<std::size_t>(space_.rank), AlgebraElement(space_.algebra));
}

ModuleElement::ModuleElement(ModuleSpace space, std::vector<AlgebraElement> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(space_.rank)) {
        throw Error(Errc::SpaceMismatch, "entry count does not match module rank");
    }
    for (const auto& e : entries_) {
        if (!(e.descriptor() == space_.algebra)) {
            throw Error(Errc::SpaceMismatch, "entry does not belong to the module's algebra");
        }
    }
}

ModuleElement ModuleElement::random(const ModuleSpace& space, Rng& rng) {
    std::vector<AlgebraElement> entries;
    for (int i = 0; i < space.rank; ++i) {
        entries.push_back(AlgebraElement::random(space.algebra, rng));
    }
    return {space, std::move(entries)};
}

ModuleElement ModuleElement::generator(const ModuleSpace& space, int slot) {
    ModuleElement x(space);
    x.entries_.at(static_cast<std::size_t>(slot)) = AlgebraElement::identity(space.algebra);
    return x;
}

ModuleElement ModuleElement::basis_element(const ModuleSpace& space, std::size_t index) {
    Vector coords = Vector::Zero(static_cast<Eigen::Index>(space.dimension()));
    coords(static_cast<Eigen::Index>(index)) = 1.0;
    return from_coordinates(space, coords);
}

ModuleElement ModuleElement::from_coordinates(const ModuleSpace& space, const Vector& coords) {
    const auto dim = static_cast<Eigen::Index>(space.algebra.dimension());
    if (coords.size() != dim * space.rank) {
        throw Error(Errc::SpaceMismatch, "coordinate vector has wrong length");
    }
    std::vector<AlgebraElement> entries;
    for (int i = 0; i < space.rank; ++i) {
        entries.push_back(AlgebraElement::from_coordinates(space.algebra, coords.segment(i * dim, dim)));
    }
    return {space, std::move(entries)};
}

Vector ModuleElement::coordinates() const {
    const auto dim = static_cast<Eigen::Index>(space_.algebra.dimension());
    Vector v(dim * space_.rank);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        v.segment(static_cast<Eigen::Index>(i) * dim, dim) = entries_[i].coordinates();
    }
    return v;
}

bool ModuleElement::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const AlgebraElement& a) { return a.is_zero(); });
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
    require_same_space(space_, other.space_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
    require_same_space(space_, other.space_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ModuleElement& ModuleElement::operator*=(Complex s) {
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

ModuleElement operator*(const AlgebraElement& a, const ModuleElement& x) {
    require_same_algebra(a.descriptor(), x.space().algebra);
    std::vector<AlgebraElement> entries;
    entries.reserve(x.entries().size());
    for (const auto& e : x.entries()) {
        entries.push_back(a * e);
    }
    return {x.space(), std::move(entries)};
}

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y) {
    require_same_space(x.space(), y.space());
    const auto& d = x.space().algebra;
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < d.block_count(); ++b) {
        Matrix acc = Matrix::Zero(d.block_size(b), d.block_size(b));
        for (std::size_t i = 0; i < x.entries().size(); ++i) {
            acc.noalias() += x.entry(i).block(b) * y.entry(i).block(b).adjoint();
        }
        blocks.push_back(std::move(acc));
    }
    return {d, std::move(blocks)};
}

AlgebraElement abs_value(const ModuleElement& x) { return psd_sqrt(inner_product(x, x)); }

double module_norm(const ModuleElement& x) { return std::sqrt(inner_product(x, x).norm()); }

bool is_orthogonal(const ModuleElement& x, const ModuleElement& y, double tol) {
    const double scale = module_norm(x) * module_norm(y);
    if (scale == 0.0) {
        return true;
    }
    return inner_product(x, y).norm() <= tol * scale;
}

bool is_theta_orthogonal(const ModuleElement& x, const ModuleElement& y, double theta) {
    if (!(theta >= 0.0 && theta < 1.0)) {
        throw Error(Errc::InvalidTheta, "theta must lie in [0, 1), got " + std::to_string(theta));
    }
    if (theta == 0.0) {
        return is_orthogonal(x, y);
    }
    return inner_product(x, y).norm() <= theta * module_norm(x) * module_norm(y);
}

ModuleElement orthogonalize(const ModuleElement& z, const ModuleElement& x) {
    require_same_space(z.space(), x.space());
    const AlgebraElement gram = inner_product(x, x);
    const double scale = gram.norm();
    if (scale == 0.0 || min_eigenvalue(gram) <= 1e-10 * scale) {
        throw Error(Errc::SingularGram, "<x, x> is not invertible");
    }
    return z - (inner_product(z, x) * inverse(gram)) * x;
}

ModuleElement orthogonal_part(const ModuleElement& z, const ModuleElement& x) {
    require_same_space(z.space(), x.space());
    const AlgebraElement gram = inner_product(x, x);
    return z - (inner_product(z, x) * pseudo_inverse(gram)) * x;
}

std::pair<ModuleElement, ModuleElement> random_orthogonal_pair(const ModuleSpace& space, Rng& rng) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        ModuleElement x = ModuleElement::random(space, rng);
        ModuleElement z = ModuleElement::random(space, rng);
        try {
            return {x, orthogonalize(z, x)};
        } catch (const Error& e) {
            if (e.code() != Errc::SingularGram) {
                throw;
            }
        }
    }
    throw Error(Errc::SingularGram, "no invertible Gram element in 16 draws");
}

AlgebraElement polarize(const QuadraticForm& q, const ModuleElement& x, const ModuleElement& y) {
    AlgebraElement acc(x.space().algebra);
    Complex phase = 1.0;
    for (int k = 0; k < 4; ++k) {
        acc += phase * q(x + phase * y);
        phase *= Complex{0.0, 1.0};
    }
    return 0.25 * acc;
}

std::size_t fullness_rank(const ModuleSpace& space) {
    const std::size_t dim = space.dimension();
    const auto adim = static_cast<Eigen::Index>(space.algebra.dimension());
    std::vector<ModuleElement> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back(ModuleElement::basis_element(space, i));
    }
    Matrix values(static_cast<Eigen::Index>(dim * dim), adim);
    Eigen::Index row = 0;
    for (const auto& g : basis) {
        for (const auto& h : basis) {
            values.row(row++) = inner_product(g, h).coordinates().transpose();
        }
    }
    Eigen::FullPivLU<Matrix> lu(values);
    return static_cast<std::size_t>(lu.rank());
}

std::pair<std::size_t, Vector> minimal_projection_vector(const AlgebraElement& e, double tol) {
    if (distance(e, e.adjoint()) > tol || distance(e * e, e) > tol) {
        throw Error(Errc::NotMinimalProjection, "not a projection");
    }
    std::optional<std::size_t> support;
    for (std::size_t b = 0; b < e.blocks().size(); ++b) {
        if (e.block(b).norm() > tol) {
            if (support) {
                throw Error(Errc::NotMinimalProjection, "projection is supported in more than one block");
            }
            support = b;
        }
    }
    if (!support) {
        throw Error(Errc::NotMinimalProjection, "zero projection");
    }
    const Matrix& block = e.block(*support);
    if (std::abs(block.trace() - 1.0) > tol) {
        throw Error(Errc::NotMinimalProjection, "projection has rank other than one");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (block + block.adjoint()));
    const Eigen::Index top = solver.eigenvalues().size() - 1;
    return {*support, solver.eigenvectors().col(top)};
}

CompressedVector compress(const AlgebraElement& e, const ModuleElement& x) {
    require_same_algebra(e.descriptor(), x.space().algebra);
    auto [block, eta] = minimal_projection_vector(e);
    const auto k = eta.size();
    Vector coords(k * x.space().rank);
    for (std::size_t j = 0; j < x.entries().size(); ++j) {
        coords.segment(static_cast<Eigen::Index>(j) * k, k) = (eta.adjoint() * x.entry(j).block(block)).transpose();
    }
    return {e, block, std::move(eta), std::move(coords)};
}

ModuleElement decompress(const CompressedVector& v, const ModuleSpace& space) {
    const auto k = v.eta.size();
    if (v.coords.size() != k * space.rank) {
        throw Error(Errc::SpaceMismatch, "compressed vector does not fit the module");
    }
    ModuleElement x(space);
    for (int j = 0; j < space.rank; ++j) {
        x.entry(static_cast<std::size_t>(j)).block(v.block) = v.eta * v.coords.segment(j * k, k).transpose();
    }
    return x;
}

Complex hilbert_inner(const CompressedVector& u, const CompressedVector& v) { return v.coords.dot(u.coords); }

double hilbert_norm(const CompressedVector& u) { return u.coords.norm(); }

bool psd_leq(const AlgebraElement& a, const AlgebraElement& b, double scale) {
    return min_eigenvalue(b - a) >= -1e-9 * scale;
}

std::vector<Complex> lambda_grid() {
    std::vector<Complex> grid;
    for (int j = -2; j <= 2; ++j) {
        const double radius = std::ldexp(1.0, j);
        for (int t = 0; t < 32; ++t) {
            grid.push_back(std::polar(radius, 2.0 * M_PI * t / 32.0));
        }
    }
    return grid;
}

bool LemmaReport::all() const {
    return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

namespace {

constexpr double kLemmaTol = 1e-9;

double abs_discrepancy(const AlgebraElement& u, const AlgebraElement& v, double scale, AbsComparison mode) {
    if (mode == AbsComparison::StrictEigenvalues) {
        const auto eu = eigenvalues(u);
        const auto ev = eigenvalues(v);
        double worst = 0.0;
        for (std::size_t i = 0; i < eu.size(); ++i) {
            if (eu[i] != ev[i]) {
                // Any mismatch is a failure; report it above tolerance.
                worst = std::max(worst, std::max(std::abs(eu[i] - ev[i]) / scale, 2.0 * kLemmaTol));
            }
        }
        return worst;
    }
    return distance(u, v) / scale;
}

double order_violation(const AlgebraElement& lower, const AlgebraElement& upper, double scale) {
    return std::max(0.0, -min_eigenvalue(upper - lower)) / scale;
}

}  // namespace

LemmaReport lemma_forward(const ModuleElement& x, const ModuleElement& y, const LemmaOptions& options) {
    require_same_space(x.space(), y.space());
    LemmaReport report;
    report.holds.fill(true);
    const double nx = module_norm(x);
    const double ny = module_norm(y);
    if (nx == 0.0 || ny == 0.0) {
        return report;
    }
    const AlgebraElement gram_x = inner_product(x, x);
    const AlgebraElement abs_x = psd_sqrt(gram_x);

    report.worst[0] = inner_product(x, y).norm() / (nx * ny);

    auto note = [&](int idx, double value) { report.worst[idx] = std::max(report.worst[idx], value); };

    for (Complex lambda : lambda_grid()) {
        const double scale = nx + std::abs(lambda) * ny;
        const ModuleElement plus = x + lambda * y;
        const ModuleElement minus = x - lambda * y;
        const AlgebraElement gram_plus = inner_product(plus, plus);
        note(1, abs_discrepancy(psd_sqrt(inner_product(minus, minus)), psd_sqrt(gram_plus), scale,
                                options.comparison));
        note(3, order_violation(gram_x, gram_plus, scale * scale));
    }

    Rng rng(options.seed);
    for (int s = 0; s < options.sample_count; ++s) {
        const double radius = std::ldexp(1.0, rng.uniform_int(-2, 2));
        AlgebraElement a = AlgebraElement::random(x.space().algebra, rng);
        a *= radius / std::max(a.norm(), 1e-300);
        const double scale = nx + a.norm() * ny;
        const ModuleElement plus = x + a * y;
        const ModuleElement minus = x - a * y;
        const AlgebraElement gram_plus = inner_product(plus, plus);
        const AlgebraElement abs_plus = psd_sqrt(gram_plus);
        note(2, abs_discrepancy(psd_sqrt(inner_product(minus, minus)), abs_plus, scale, options.comparison));
        note(4, order_violation(gram_x, gram_plus, scale * scale));
        note(5, order_violation(abs_x, abs_plus, scale));
    }

    for (std::size_t i = 0; i < 6; ++i) {
        report.holds[i] = report.worst[i] <= kLemmaTol;
    }
    return report;
}

AlgebraElement lemma_witness(const ModuleElement& x, const ModuleElement& y) { return inner_product(x, y); }

AlgebraElement witness_gap(const ModuleElement& x, const ModuleElement& y, const AlgebraElement& a) {
    const ModuleElement plus = x + a * y;
    const ModuleElement minus = x - a * y;
    return inner_product(plus, plus) - inner_product(minus, minus);
}

}  // namespace orthopair
