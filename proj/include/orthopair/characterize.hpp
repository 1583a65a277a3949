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
#include <string>
#include <vector>

#include "orthopair/operators.hpp"

namespace orthopair {

/// gamma_e for one minimal projection e, from tr<T(ex), S(ex)> / tr<ex, ex>.
struct ProjectionGamma {
    std::size_t block = 0;
    /// "canonical" for E_11, "random-<n>" for eta (x) eta with a Haar unit eta.
    std::string projection;
    Complex gamma;
};

struct GammaEstimate {
    CentralElement gamma;
    std::vector<ProjectionGamma> samples;
    /// Largest |gamma_e - gamma_f| between projections in one block.
    double spread = 0.0;
    double tolerance = 0.0;
    bool consistent = true;
    /// Independent estimate fitted over canonical basis pairs.
    CentralElement least_squares;
};

struct ExtractOptions {
    std::uint64_t seed = 0;
    int random_projections = 3;
    /// Base tolerance, multiplied by |T| |S|.
    double tol = 1e-8;
};

/// tol * |T| |S|.
double characterization_tolerance(const ModuleOperator& t, const ModuleOperator& s, double tol = 1e-8);

/// Per-block gamma from minimal projections. Throws DegenerateSample only.
GammaEstimate estimate_gamma(const ModuleOperator& t, const ModuleOperator& s, const ExtractOptions& options = {});
/// estimate_gamma that also throws InconsistentGamma when the spread exceeds the tolerance.
GammaEstimate extract_gamma(const ModuleOperator& t, const ModuleOperator& s, const ExtractOptions& options = {});

/// Per-block least-squares fit of <Tb, Sb'> ~ gamma <b, b'> over canonical basis pairs.
CentralElement least_squares_gamma(const ModuleOperator& t, const ModuleOperator& s);

/// max |<Tb, Sb'> - gamma <b, b'>| over all canonical basis pairs (b, b').
/// The form is sesquilinear, so zero here means zero everywhere.
double verify_characterization(const ModuleOperator& t, const ModuleOperator& s, const CentralElement& gamma);

struct CharacterizationResult {
    CentralElement gamma;
    double residual = 0.0;
    double tolerance = 0.0;
    std::vector<ProjectionGamma> per_projection;
    double spread = 0.0;
    std::optional<CentralElement> least_squares;
};

struct Witness {
    ModuleElement x;
    ModuleElement y;
    /// |<x, y>|
    double inner_norm = 0.0;
    /// |<Tx, Sy>|
    double image_inner_norm = 0.0;
    /// |<Tx, Sy>| / (|Tx| |Sy|)
    double ratio = 0.0;
};

enum class VerdictKind { Preserving, NotPreserving, ZeroPair, Inconclusive };

std::string_view verdict_name(VerdictKind kind) noexcept;

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<CharacterizationResult> characterization;
    std::optional<Witness> witness;
    std::string detail;
};

struct DecideOptions {
    std::uint64_t seed = 0;
    double tol = 1e-8;
    int witness_budget = 512;
    /// Witness threshold on |<Tx, Sy>| / (|Tx| |Sy|).
    double witness_tol = 1e-6;
};

/// Orthogonal pair (x, y) with |<Tx, Sy>| > witness_tol |Tx| |Sy|, searched over
/// budget deterministic draws. Half of the draws use x with singular Gram.
std::optional<Witness> search_witness(const ModuleOperator& t, const ModuleOperator& s, std::uint64_t seed,
                                      int budget, double witness_tol);
/// Re-evaluates both inequalities of a witness against (T, S).
bool confirm_witness(const ModuleOperator& t, const ModuleOperator& s, const Witness& w,
                     double witness_tol = 1e-6);

Verdict decide_preserving(const ModuleOperator& t, const ModuleOperator& s, const DecideOptions& options = {});

/// Compares <.,.> with <x, y>_2 = <Gx, y> for positive invertible G: preserving
/// with gamma means <x, y>_2 = gamma <x, y>. Throws NotPositive when G is not
/// self-adjoint positive invertible.
Verdict inner_product_comparison(const ModuleOperator& g, const DecideOptions& options = {});

}  // namespace orthopair
