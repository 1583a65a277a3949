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

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "orthopair/algebra.hpp"

namespace orthopair {

/// The free Hilbert module A^n.
struct ModuleSpace {
    AlgebraDescriptor algebra;
    int rank = 1;

    ModuleSpace() = default;
    ModuleSpace(AlgebraDescriptor algebra, int rank);

    /// Complex dimension n * sum k_i^2.
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(rank) * algebra.dimension(); }

    friend bool operator==(const ModuleSpace&, const ModuleSpace&) = default;
};

void require_same_space(const ModuleSpace& a, const ModuleSpace& b);

class ModuleElement {
public:
    ModuleElement() = default;
    /// Zero element.
    explicit ModuleElement(ModuleSpace space);
    ModuleElement(ModuleSpace space, std::vector<AlgebraElement> entries);

    static ModuleElement random(const ModuleSpace& space, Rng& rng);
    /// Identity in slot i, zero elsewhere.
    static ModuleElement generator(const ModuleSpace& space, int slot);
    /// Canonical C-basis element: a matrix unit in one slot. Index order is
    /// slot-major, then the algebra's coordinate order.
    static ModuleElement basis_element(const ModuleSpace& space, std::size_t index);
    static ModuleElement from_coordinates(const ModuleSpace& space, const Vector& coords);

    const ModuleSpace& space() const noexcept { return space_; }
    const std::vector<AlgebraElement>& entries() const noexcept { return entries_; }
    const AlgebraElement& entry(std::size_t i) const { return entries_.at(i); }
    AlgebraElement& entry(std::size_t i) { return entries_.at(i); }

    Vector coordinates() const;
    bool is_zero() const;

    ModuleElement& operator+=(const ModuleElement& other);
    ModuleElement& operator-=(const ModuleElement& other);
    ModuleElement& operator*=(Complex s);

    friend ModuleElement operator+(ModuleElement x, const ModuleElement& y) { return x += y; }
    friend ModuleElement operator-(ModuleElement x, const ModuleElement& y) { return x -= y; }
    friend ModuleElement operator*(Complex s, ModuleElement x) { return x *= s; }
    /// Left module action (a x)_i = a x_i.
    friend ModuleElement operator*(const AlgebraElement& a, const ModuleElement& x);

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    ModuleSpace space_;
    std::vector<AlgebraElement> entries_;
};

/// <x, y> = sum_i x_i y_i^*, A-linear in the first variable.
AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y);
/// |x| = <x, x>^{1/2}.
AlgebraElement abs_value(const ModuleElement& x);
/// |<x, x>|^{1/2}.
double module_norm(const ModuleElement& x);

/// |<x,y>| <= tol * |x| |y|. Zero elements are orthogonal to everything.
bool is_orthogonal(const ModuleElement& x, const ModuleElement& y, double tol = 1e-9);
/// |<x,y>| <= theta |x| |y| for theta in [0, 1); theta = 0 falls back to is_orthogonal.
bool is_theta_orthogonal(const ModuleElement& x, const ModuleElement& y, double theta);

/// z - <z,x> <x,x>^{-1} x. Throws SingularGram unless <x,x> is invertible.
ModuleElement orthogonalize(const ModuleElement& z, const ModuleElement& x);
/// z - <z,x> <x,x>^+ x. Orthogonal to x for every x, including singular Gram.
ModuleElement orthogonal_part(const ModuleElement& z, const ModuleElement& x);
/// Random x with invertible Gram and y = orthogonalize(z, x); resamples up to 16 times.
std::pair<ModuleElement, ModuleElement> random_orthogonal_pair(const ModuleSpace& space, Rng& rng);

using QuadraticForm = std::function<AlgebraElement(const ModuleElement&)>;
/// (1/4) sum_{k=0}^{3} i^k q(x + i^k y).
AlgebraElement polarize(const QuadraticForm& q, const ModuleElement& x, const ModuleElement& y);

/// Rank of span{<g, g'>} over canonical basis elements; equals the algebra
/// dimension for a full module.
std::size_t fullness_rank(const ModuleSpace& space);

/// ex for a minimal projection e = eta eta^*, stored as its coordinates in the
/// Hilbert space E_e: row j is eta^* x_j restricted to the projection's block.
struct CompressedVector {
    AlgebraElement projection;
    std::size_t block = 0;
    Vector eta;
    Vector coords;
};

/// Validates e as a minimal projection; returns the block and unit vector eta.
std::pair<std::size_t, Vector> minimal_projection_vector(const AlgebraElement& e, double tol = 1e-10);
CompressedVector compress(const AlgebraElement& e, const ModuleElement& x);
ModuleElement decompress(const CompressedVector& v, const ModuleSpace& space);
/// [u, v] = tr <u, v> on E_e.
Complex hilbert_inner(const CompressedVector& u, const CompressedVector& v);
double hilbert_norm(const CompressedVector& u);

/// Order test b - a >= 0 decided by min eigenvalue >= -1e-9 * scale.
bool psd_leq(const AlgebraElement& a, const AlgebraElement& b, double scale);

/// How |u| = |v| is decided inside lemma_forward. StrictEigenvalues is a
/// deliberately broken comparison kept as a regression guard.
enum class AbsComparison { PsdTolerance, StrictEigenvalues };

/// 32 angles on each circle of radius 2^j, j = -2..2.
std::vector<Complex> lambda_grid();

struct LemmaOptions {
    int sample_count = 16;
    std::uint64_t seed = 0;
    AbsComparison comparison = AbsComparison::PsdTolerance;
};

/// Conditions (i)-(vi) of the orthogonality equivalence, evaluated on the
/// lambda grid and sample_count random algebra elements a.
struct LemmaReport {
    std::array<bool, 6> holds{};
    /// Worst scaled discrepancy per condition (0 when it holds exactly).
    std::array<double, 6> worst{};
    bool all() const;
};

LemmaReport lemma_forward(const ModuleElement& x, const ModuleElement& y, const LemmaOptions& options = {});
/// The witness a = <x, y>.
AlgebraElement lemma_witness(const ModuleElement& x, const ModuleElement& y);
/// |x + a y|^2 - |x - a y|^2; equals 4 <x,y><y,x> at the witness.
AlgebraElement witness_gap(const ModuleElement& x, const ModuleElement& y, const AlgebraElement& a);

}  // namespace orthopair
