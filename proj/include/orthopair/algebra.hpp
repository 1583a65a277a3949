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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orthopair/error.hpp"
#include "orthopair/random.hpp"

namespace orthopair {

/// Block sizes (k_1, ..., k_m) of the algebra M_{k_1}(C) + ... + M_{k_m}(C).
class AlgebraDescriptor {
public:
    AlgebraDescriptor() = default;
    explicit AlgebraDescriptor(std::vector<int> block_sizes);

    std::size_t block_count() const noexcept { return sizes_.size(); }
    int block_size(std::size_t i) const { return sizes_.at(i); }
    const std::vector<int>& block_sizes() const noexcept { return sizes_; }

    /// Complex dimension sum k_i^2.
    std::size_t dimension() const noexcept;
    /// Offset of block i inside the flattened coordinate vector.
    std::size_t offset(std::size_t i) const;

    friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;

private:
    std::vector<int> sizes_;
};

/// Tolerance used for Hermitian/PSD membership: 1e-9 * (1 + |h|).
double psd_tolerance(double norm) noexcept;

/// Block-diagonal complex matrix; an element of the algebra.
class AlgebraElement {
public:
    AlgebraElement() = default;
    /// Zero element.
    explicit AlgebraElement(AlgebraDescriptor descriptor);
    AlgebraElement(AlgebraDescriptor descriptor, std::vector<Matrix> blocks);

    static AlgebraElement identity(const AlgebraDescriptor& d);
    static AlgebraElement scalar(const AlgebraDescriptor& d, Complex value);
    static AlgebraElement matrix_unit(const AlgebraDescriptor& d, std::size_t block, int row, int col);
    static AlgebraElement random(const AlgebraDescriptor& d, Rng& rng);

    const AlgebraDescriptor& descriptor() const noexcept { return descriptor_; }
    std::span<const Matrix> blocks() const noexcept { return blocks_; }
    const Matrix& block(std::size_t i) const { return blocks_.at(i); }
    Matrix& block(std::size_t i) { return blocks_.at(i); }

    AlgebraElement adjoint() const;
    /// Largest singular value over all blocks, via eigenvalues of a*a.
    double norm() const;
    Complex trace() const;
    bool is_zero() const;

    /// Coordinates in the canonical matrix-unit basis (block, row, col), row-major.
    Vector coordinates() const;
    static AlgebraElement from_coordinates(const AlgebraDescriptor& d, const Vector& coords);

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(Complex s);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
    friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }
    friend AlgebraElement operator*(AlgebraElement a, Complex s) { return a *= s; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    AlgebraDescriptor descriptor_;
    std::vector<Matrix> blocks_;
};

void require_same_algebra(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);
/// Operator-norm distance |a - b|.
double distance(const AlgebraElement& a, const AlgebraElement& b);

bool is_hermitian(const AlgebraElement& h, double tol);
/// Smallest eigenvalue of the Hermitian part of h, over all blocks.
double min_eigenvalue(const AlgebraElement& h);
/// Eigenvalues of each block in ascending order, concatenated block by block.
std::vector<double> eigenvalues(const AlgebraElement& h);

/// Positive square root of a Hermitian PSD element. Eigenvalues within
/// rounding distance of zero (and negative dust above -tol) are set to zero.
AlgebraElement psd_sqrt(const AlgebraElement& h);
/// Blockwise inverse; throws Singular when some block is not invertible.
AlgebraElement inverse(const AlgebraElement& a);
/// Moore-Penrose pseudoinverse with singular values below cutoff * sigma_max
/// dropped. Resolution is limited to about 1e-7 * sigma_max since it goes
/// through the eigenvalues of a*a.
AlgebraElement pseudo_inverse(const AlgebraElement& a, double cutoff = 1e-10);

struct HilbertVector {
    std::size_t block = 0;
    Vector coords;
};

/// (eta (x) zeta)(xi) = [xi, zeta] eta, embedded in the common block.
AlgebraElement rank_one(const AlgebraDescriptor& d, const HilbertVector& eta, const HilbertVector& zeta);
/// eta (x) eta for eta normalized; E_11 of the block when eta is absent.
AlgebraElement minimal_projection(const AlgebraDescriptor& d, std::size_t block,
                                  const std::optional<Vector>& eta = std::nullopt);
/// 2p - 1 for a given projection p.
AlgebraElement symmetry_from_projection(const AlgebraElement& p);
/// 2p - 1 with p a random projection of random rank in every block.
AlgebraElement random_symmetry(const AlgebraDescriptor& d, std::uint64_t seed);
/// Random projection with uniformly random rank per block; at least one block nonzero
/// when nonzero is set.
AlgebraElement random_projection(const AlgebraDescriptor& d, Rng& rng, bool nonzero = true);
/// Haar unitary in every block.
AlgebraElement random_unitary(const AlgebraDescriptor& d, Rng& rng);

/// One complex scalar per block: an element of the center.
class CentralElement {
public:
    CentralElement() = default;
    CentralElement(AlgebraDescriptor descriptor, std::vector<Complex> scalars);

    static CentralElement constant(const AlgebraDescriptor& d, Complex value);
    /// Random invertible element: modulus in [min_modulus, max_modulus], uniform phase.
    static CentralElement random(const AlgebraDescriptor& d, Rng& rng, double min_modulus = 0.5,
                                 double max_modulus = 2.0);

    const AlgebraDescriptor& descriptor() const noexcept { return descriptor_; }
    const std::vector<Complex>& scalars() const noexcept { return scalars_; }
    Complex operator[](std::size_t i) const { return scalars_.at(i); }

    AlgebraElement embed() const;
    CentralElement conj() const;
    CentralElement inverse() const;
    /// Principal square root per block.
    CentralElement sqrt() const;
    double max_modulus() const;

    friend bool operator==(const CentralElement&, const CentralElement&) = default;

private:
    AlgebraDescriptor descriptor_;
    std::vector<Complex> scalars_;
};

struct CentralityWitness {
    std::size_t block = 0;
    int row = 0;
    int col = 0;
    /// |a E - E a| for the offending matrix unit E.
    double commutator_norm = 0.0;
};

/// Checks commutation with every canonical matrix unit; returns the first
/// violating unit, or nullopt when a is central.
std::optional<CentralityWitness> centrality_witness(const AlgebraElement& a, double tol = 1e-12);
bool is_central(const AlgebraElement& a, double tol = 1e-12);
/// Per-block tr(a_i)/k_i. Exact inverse of embed on central elements.
CentralElement central_part(const AlgebraElement& a);

}  // namespace orthopair
