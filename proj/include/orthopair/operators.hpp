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

#include <cstdint>
#include <optional>
#include <vector>

#include "orthopair/module.hpp"

namespace orthopair {

/// A-linear map A^n -> A^m acting by right coefficients: T(x)_j = sum_i x_i C_ij.
class ModuleOperator {
public:
    ModuleOperator() = default;
    /// coeffs is n x m, row-major.
    ModuleOperator(ModuleSpace domain, ModuleSpace codomain, std::vector<AlgebraElement> coeffs);

    static ModuleOperator identity(const ModuleSpace& space);
    static ModuleOperator zero(const ModuleSpace& domain, const ModuleSpace& codomain);
    /// x -> gamma x.
    static ModuleOperator central(const ModuleSpace& space, const CentralElement& gamma);
    /// x_i -> x_i w in every slot. Non-central w gives a non-scalar twist.
    static ModuleOperator right_multiplication(const ModuleSpace& space, const AlgebraElement& w);
    /// Exchanges slots i and j.
    static ModuleOperator slot_swap(const ModuleSpace& space, int i, int j);
    static ModuleOperator random(const ModuleSpace& domain, const ModuleSpace& codomain, Rng& rng);
    /// Per block U diag(s) V with Haar U, V and singular values s in [smin, smax].
    static ModuleOperator random_invertible(const ModuleSpace& space, Rng& rng, double smin = 0.5,
                                            double smax = 2.0);
    /// Builds from per-block (n k_b) x (m k_b) matrices whose (i, j) sub-block is C_ij.
    static ModuleOperator from_block_matrices(const ModuleSpace& domain, const ModuleSpace& codomain,
                                              const std::vector<Matrix>& blocks);

    const ModuleSpace& domain() const noexcept { return domain_; }
    const ModuleSpace& codomain() const noexcept { return codomain_; }
    const AlgebraElement& coeff(int i, int j) const;
    const std::vector<AlgebraElement>& coeffs() const noexcept { return coeffs_; }

    Matrix block_matrix(std::size_t block) const;
    ModuleElement apply(const ModuleElement& x) const;
    ModuleElement operator()(const ModuleElement& x) const { return apply(x); }
    bool is_zero() const;

    ModuleOperator& operator+=(const ModuleOperator& other);
    ModuleOperator& operator-=(const ModuleOperator& other);
    ModuleOperator& operator*=(Complex s);
    friend ModuleOperator operator+(ModuleOperator a, const ModuleOperator& b) { return a += b; }
    friend ModuleOperator operator-(ModuleOperator a, const ModuleOperator& b) { return a -= b; }
    friend ModuleOperator operator*(Complex s, ModuleOperator a) { return a *= s; }
    /// gamma T.
    friend ModuleOperator operator*(const CentralElement& gamma, const ModuleOperator& t);

    friend bool operator==(const ModuleOperator&, const ModuleOperator&) = default;

private:
    ModuleSpace domain_;
    ModuleSpace codomain_;
    std::vector<AlgebraElement> coeffs_;
};

ModuleElement apply(const ModuleOperator& t, const ModuleElement& x);
/// T o U.
ModuleOperator compose(const ModuleOperator& t, const ModuleOperator& u);
/// T* with <Tx, y> = <x, T*y>; coefficients (T*)_ji = C_ij^*.
ModuleOperator adjoint_op(const ModuleOperator& t);
ModuleOperator invert(const ModuleOperator& t);
/// Largest singular value of the C-matrix realization.
double op_norm(const ModuleOperator& t);
/// inf |Tx| over |x| = 1; the smallest singular value for square realizations.
double smin(const ModuleOperator& t);
/// Largest coefficientwise entry modulus of T - U.
double max_coeff_diff(const ModuleOperator& t, const ModuleOperator& u);
/// Unitary operator built from Haar (n k_b) x (n k_b) unitaries per block.
ModuleOperator random_unitary_module_op(const ModuleSpace& space, std::uint64_t seed);

/// C-linear map on canonical coordinates; need not be A-linear or local.
class GeneralLinearMap {
public:
    GeneralLinearMap() = default;
    GeneralLinearMap(ModuleSpace domain, ModuleSpace codomain, Matrix matrix);

    const ModuleSpace& domain() const noexcept { return domain_; }
    const ModuleSpace& codomain() const noexcept { return codomain_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    ModuleElement apply(const ModuleElement& x) const;

private:
    ModuleSpace domain_;
    ModuleSpace codomain_;
    Matrix matrix_;
};

GeneralLinearMap realize(const ModuleOperator& t);

struct LocalityResult {
    bool local = true;
    /// Worst |a L(x)| / (|a| |L(x)|) over the trials.
    double worst_ratio = 0.0;
    std::optional<AlgebraElement> witness_a;
    std::optional<ModuleElement> witness_x;
};

/// Random singular a = b(1 - p), x in the kernel of left multiplication by a,
/// then tests a L(x) = 0.
LocalityResult is_local(const GeneralLinearMap& l, int trials, std::uint64_t seed, double tol = 1e-9);

struct ALinearityResult {
    bool a_linear = true;
    double worst_ratio = 0.0;
    std::optional<AlgebraElement> witness_a;
    std::optional<ModuleElement> witness_x;
};

ALinearityResult is_a_linear(const GeneralLinearMap& l, int trials, std::uint64_t seed, double tol = 1e-9);

class NotALinearError : public Error {
public:
    NotALinearError(std::size_t basis_index, double discrepancy);
    std::size_t basis_index() const noexcept { return basis_index_; }
    double discrepancy() const noexcept { return discrepancy_; }

private:
    std::size_t basis_index_;
    double discrepancy_;
};

/// Reads coefficients off the images of the generators and checks the
/// result against l on every canonical basis element.
ModuleOperator promote(const GeneralLinearMap& l);

}  // namespace orthopair
