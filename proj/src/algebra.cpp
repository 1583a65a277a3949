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

#include "orthopair/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace orthopair {

namespace {

using HermitianSolver = Eigen::SelfAdjointEigenSolver<Matrix>;

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

std::string shape_list(const std::vector<int>& sizes) {
    std::string out = "(";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out += (i ? "," : "") + std::to_string(sizes[i]);
    }
    return out + ")";
}

}  // namespace

AlgebraDescriptor::AlgebraDescriptor(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
    if (sizes_.empty()) {
        throw Error(Errc::InvalidArgument, "algebra needs at least one block");
    }
    for (int k : sizes_) {
        if (k < 1) {
            throw Error(Errc::InvalidArgument, "block sizes must be positive, got " + shape_list(sizes_));
        }
    }
}

std::size_t AlgebraDescriptor::dimension() const noexcept {
    std::size_t dim = 0;
    for (int k : sizes_) {
        dim += static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    }
    return dim;
}

std::size_t AlgebraDescriptor::offset(std::size_t i) const {
    std::size_t off = 0;
    for (std::size_t b = 0; b < i; ++b) {
        off += static_cast<std::size_t>(sizes_.at(b)) * static_cast<std::size_t>(sizes_.at(b));
    }
    return off;
}

double psd_tolerance(double norm) noexcept { return 1e-9 * (1.0 + norm); }

void require_same_algebra(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    if (!(a == b)) {
        throw Error(Errc::InvalidOperand,
                    "algebra mismatch " + shape_list(a.block_sizes()) + " vs " + shape_list(b.block_sizes()));
    }
}

AlgebraElement::AlgebraElement(AlgebraDescriptor descriptor) : descriptor_(std::move(descriptor)) {
    blocks_.reserve(descriptor_.block_count());
    for (int k : descriptor_.block_sizes()) {
        blocks_.push_back(Matrix::Zero(k, k));
    }
}

AlgebraElement::AlgebraElement(AlgebraDescriptor descriptor, std::vector<Matrix> blocks)
    : descriptor_(std::move(descriptor)), blocks_(std::move(blocks)) {
    if (blocks_.size() != descriptor_.block_count()) {
        throw Error(Errc::InvalidOperand, "block count does not match descriptor");
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const int k = descriptor_.block_size(i);
        if (blocks_[i].rows() != k || blocks_[i].cols() != k) {
            throw Error(Errc::InvalidOperand, "block " + std::to_string(i) + " is not " + std::to_string(k) +
                                                  "x" + std::to_string(k));
        }
    }
}

AlgebraElement AlgebraElement::identity(const AlgebraDescriptor& d) { return scalar(d, 1.0); }

AlgebraElement AlgebraElement::scalar(const AlgebraDescriptor& d, Complex value) {
    std::vector<Matrix> blocks;
    for (int k : d.block_sizes()) {
        blocks.push_back(value * Matrix::Identity(k, k));
    }
    return {d, std::move(blocks)};
}

AlgebraElement AlgebraElement::matrix_unit(const AlgebraDescriptor& d, std::size_t block, int row, int col) {
    AlgebraElement e(d);
    const int k = d.block_size(block);
    if (row < 0 || col < 0 || row >= k || col >= k) {
        throw Error(Errc::InvalidArgument, "matrix unit index out of range");
    }
    e.blocks_[block](row, col) = 1.0;
    return e;
}

AlgebraElement AlgebraElement::random(const AlgebraDescriptor& d, Rng& rng) {
    std::vector<Matrix> blocks;
    for (int k : d.block_sizes()) {
        blocks.push_back(rng.gaussian_matrix(k, k));
    }
    return {d, std::move(blocks)};
}

AlgebraElement AlgebraElement::adjoint() const {
    std::vector<Matrix> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        blocks.push_back(b.adjoint());
    }
    return {descriptor_, std::move(blocks)};
}

double AlgebraElement::norm() const {
    double largest = 0.0;
    for (const auto& b : blocks_) {
        HermitianSolver solver(b.adjoint() * b, Eigen::EigenvaluesOnly);
        largest = std::max(largest, solver.eigenvalues().maxCoeff());
    }
    return std::sqrt(std::max(largest, 0.0));
}

Complex AlgebraElement::trace() const {
    Complex t = 0.0;
    for (const auto& b : blocks_) {
        t += b.trace();
    }
    return t;
}

bool AlgebraElement::is_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.isZero(0.0); });
}

Vector AlgebraElement::coordinates() const {
    Vector v(static_cast<Eigen::Index>(descriptor_.dimension()));
    Eigen::Index at = 0;
    for (const auto& b : blocks_) {
        for (Eigen::Index r = 0; r < b.rows(); ++r) {
            for (Eigen::Index c = 0; c < b.cols(); ++c) {
                v(at++) = b(r, c);
            }
        }
    }
    return v;
}

AlgebraElement AlgebraElement::from_coordinates(const AlgebraDescriptor& d, const Vector& coords) {
    if (static_cast<std::size_t>(coords.size()) != d.dimension()) {
        throw Error(Errc::InvalidOperand, "coordinate vector has wrong length");
    }
    AlgebraElement a(d);
    Eigen::Index at = 0;
    for (auto& b : a.blocks_) {
        for (Eigen::Index r = 0; r < b.rows(); ++r) {
            for (Eigen::Index c = 0; c < b.cols(); ++c) {
                b(r, c) = coords(at++);
            }
        }
    }
    return a;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    require_same_algebra(descriptor_, other.descriptor_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        blocks_[i] += other.blocks_[i];
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    require_same_algebra(descriptor_, other.descriptor_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        blocks_[i] -= other.blocks_[i];
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
    for (auto& b : blocks_) {
        b *= s;
    }
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a.descriptor_, b.descriptor_);
    std::vector<Matrix> blocks;
    blocks.reserve(a.blocks_.size());
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
        blocks.push_back(a.blocks_[i] * b.blocks_[i]);
    }
    return {a.descriptor_, std::move(blocks)};
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.descriptor_ == b.descriptor_)) {
        return false;
    }
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
        if (a.blocks_[i] != b.blocks_[i]) {
            return false;
        }
    }
    return true;
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a.descriptor(), b.descriptor());
    double m = 0.0;
    for (std::size_t i = 0; i < a.blocks().size(); ++i) {
        m = std::max(m, (a.block(i) - b.block(i)).cwiseAbs().maxCoeff());
    }
    return m;
}

double distance(const AlgebraElement& a, const AlgebraElement& b) { return (a - b).norm(); }

bool is_hermitian(const AlgebraElement& h, double tol) { return distance(h, h.adjoint()) <= tol; }

double min_eigenvalue(const AlgebraElement& h) {
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& b : h.blocks()) {
        HermitianSolver solver(hermitian_part(b), Eigen::EigenvaluesOnly);
        smallest = std::min(smallest, solver.eigenvalues().minCoeff());
    }
    return smallest;
}

std::vector<double> eigenvalues(const AlgebraElement& h) {
    std::vector<double> out;
    for (const auto& b : h.blocks()) {
        HermitianSolver solver(hermitian_part(b), Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
            out.push_back(solver.eigenvalues()(i));
        }
    }
    return out;
}

AlgebraElement psd_sqrt(const AlgebraElement& h) {
    const double scale = h.norm();
    const double tol = psd_tolerance(scale);
    const double asym = distance(h, h.adjoint());
    if (asym > tol) {
        throw Error(Errc::NotHermitian, "|h - h*| = " + std::to_string(asym));
    }
    // Eigenvalues below this are rounding noise of a zero eigenvalue.
    const double dust = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    std::vector<Matrix> blocks;
    blocks.reserve(h.blocks().size());
    for (const auto& b : h.blocks()) {
        HermitianSolver solver(hermitian_part(b));
        Eigen::VectorXd lambda = solver.eigenvalues();
        if (lambda.size() > 0 && lambda.minCoeff() < -tol) {
            throw Error(Errc::NotPositive, "min eigenvalue " + std::to_string(lambda.minCoeff()));
        }
        for (Eigen::Index i = 0; i < lambda.size(); ++i) {
            lambda(i) = lambda(i) <= dust ? 0.0 : std::sqrt(lambda(i));
        }
        const Matrix& v = solver.eigenvectors();
        blocks.push_back(v * lambda.cast<Complex>().asDiagonal() * v.adjoint());
    }
    return {h.descriptor(), std::move(blocks)};
}

AlgebraElement inverse(const AlgebraElement& a) {
    std::vector<Matrix> blocks;
    blocks.reserve(a.blocks().size());
    for (const auto& b : a.blocks()) {
        HermitianSolver solver(b.adjoint() * b, Eigen::EigenvaluesOnly);
        const auto& s2 = solver.eigenvalues();
        if (s2.minCoeff() <= 0.0 || std::sqrt(s2.minCoeff()) < 1e-10 * std::sqrt(s2.maxCoeff())) {
            throw Error(Errc::Singular, "algebra element is not invertible");
        }
        blocks.push_back(b.inverse());
    }
    return {a.descriptor(), std::move(blocks)};
}

AlgebraElement pseudo_inverse(const AlgebraElement& a, double cutoff) {
    std::vector<Matrix> blocks;
    blocks.reserve(a.blocks().size());
    for (const auto& b : a.blocks()) {
        // a+ = (a*a)+ a*, with (a*a)+ from the Hermitian eigendecomposition.
        HermitianSolver solver(b.adjoint() * b);
        const auto& s2 = solver.eigenvalues();
        const double smax2 = std::max(s2.maxCoeff(), 0.0);
        // Eigenvalues of a*a carry absolute error ~eps |a|^2; anything at that
        // level is rounding dust, whatever the requested cutoff.
        const double keep = std::max(cutoff * cutoff, 64.0 * std::numeric_limits<double>::epsilon()) * smax2;
        Eigen::VectorXd inv(s2.size());
        for (Eigen::Index i = 0; i < s2.size(); ++i) {
            inv(i) = (smax2 > 0.0 && s2(i) > keep) ? 1.0 / s2(i) : 0.0;
        }
        const Matrix& v = solver.eigenvectors();
        blocks.push_back(v * inv.cast<Complex>().asDiagonal() * v.adjoint() * b.adjoint());
    }
    return {a.descriptor(), std::move(blocks)};
}

AlgebraElement rank_one(const AlgebraDescriptor& d, const HilbertVector& eta, const HilbertVector& zeta) {
    if (eta.block != zeta.block) {
        throw Error(Errc::BlockMismatch, "rank-one operator needs both vectors in one block");
    }
    const int k = d.block_size(eta.block);
    if (eta.coords.size() != k || zeta.coords.size() != k) {
        throw Error(Errc::InvalidOperand, "vector length does not match block size");
    }
    AlgebraElement a(d);
    a.block(eta.block) = eta.coords * zeta.coords.adjoint();
    return a;
}

AlgebraElement minimal_projection(const AlgebraDescriptor& d, std::size_t block, const std::optional<Vector>& eta) {
    const int k = d.block_size(block);
    if (!eta) {
        return AlgebraElement::matrix_unit(d, block, 0, 0);
    }
    const double n = eta->norm();
    if (n == 0.0) {
        throw Error(Errc::ZeroVector, "minimal projection from a zero vector");
    }
    if (eta->size() != k) {
        throw Error(Errc::InvalidOperand, "vector length does not match block size");
    }
    const HilbertVector unit{block, *eta / n};
    return rank_one(d, unit, unit);
}

AlgebraElement symmetry_from_projection(const AlgebraElement& p) {
    return 2.0 * p - AlgebraElement::identity(p.descriptor());
}

AlgebraElement random_projection(const AlgebraDescriptor& d, Rng& rng, bool nonzero) {
    std::vector<int> ranks(d.block_count());
    for (;;) {
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            ranks[i] = rng.uniform_int(0, d.block_size(i));
        }
        if (!nonzero || std::any_of(ranks.begin(), ranks.end(), [](int r) { return r > 0; })) {
            break;
        }
    }
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        blocks.push_back(rng.random_projection(d.block_size(i), ranks[i]));
    }
    return {d, std::move(blocks)};
}

AlgebraElement random_symmetry(const AlgebraDescriptor& d, std::uint64_t seed) {
    Rng rng(seed);
    return symmetry_from_projection(random_projection(d, rng, false));
}

AlgebraElement random_unitary(const AlgebraDescriptor& d, Rng& rng) {
    std::vector<Matrix> blocks;
    for (int k : d.block_sizes()) {
        blocks.push_back(rng.haar_unitary(k));
    }
    return {d, std::move(blocks)};
}

CentralElement::CentralElement(AlgebraDescriptor descriptor, std::vector<Complex> scalars)
    : descriptor_(std::move(descriptor)), scalars_(std::move(scalars)) {
    if (scalars_.size() != descriptor_.block_count()) {
        throw Error(Errc::InvalidOperand, "central element needs one scalar per block");
    }
}

CentralElement CentralElement::constant(const AlgebraDescriptor& d, Complex value) {
    return {d, std::vector<Complex>(d.block_count(), value)};
}

CentralElement CentralElement::random(const AlgebraDescriptor& d, Rng& rng, double min_modulus,
                                      double max_modulus) {
    std::vector<Complex> s;
    for (std::size_t i = 0; i < d.block_count(); ++i) {
        const double r = rng.uniform(min_modulus, max_modulus);
        const double phi = rng.uniform(-M_PI, M_PI);
        s.push_back(std::polar(r, phi));
    }
    return {d, std::move(s)};
}

AlgebraElement CentralElement::embed() const {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < scalars_.size(); ++i) {
        const int k = descriptor_.block_size(i);
        blocks.push_back(scalars_[i] * Matrix::Identity(k, k));
    }
    return {descriptor_, std::move(blocks)};
}

CentralElement CentralElement::conj() const {
    std::vector<Complex> s;
    for (Complex z : scalars_) {
        s.push_back(std::conj(z));
    }
    return {descriptor_, std::move(s)};
}

CentralElement CentralElement::inverse() const {
    std::vector<Complex> s;
    for (Complex z : scalars_) {
        if (z == 0.0) {
            throw Error(Errc::Singular, "central element has a zero block scalar");
        }
        s.push_back(1.0 / z);
    }
    return {descriptor_, std::move(s)};
}

CentralElement CentralElement::sqrt() const {
    std::vector<Complex> s;
    for (Complex z : scalars_) {
        s.push_back(std::sqrt(z));
    }
    return {descriptor_, std::move(s)};
}

double CentralElement::max_modulus() const {
    double m = 0.0;
    for (Complex z : scalars_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

std::optional<CentralityWitness> centrality_witness(const AlgebraElement& a, double tol) {
    const double scale = std::max(1.0, a.norm());
    for (std::size_t b = 0; b < a.blocks().size(); ++b) {
        const Matrix& m = a.block(b);
        const int k = static_cast<int>(m.rows());
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) {
                Matrix unit = Matrix::Zero(k, k);
                unit(r, c) = 1.0;
                const Matrix comm = m * unit - unit * m;
                const double n = comm.norm();
                if (n > tol * scale) {
                    return CentralityWitness{b, r, c, n};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_central(const AlgebraElement& a, double tol) { return !centrality_witness(a, tol).has_value(); }

CentralElement central_part(const AlgebraElement& a) {
    std::vector<Complex> s;
    for (const auto& b : a.blocks()) {
        s.push_back(b.trace() / static_cast<double>(b.rows()));
    }
    return {a.descriptor(), std::move(s)};
}

}  // namespace orthopair
