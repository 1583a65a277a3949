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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthopair/serialize.hpp"

namespace orthopair {

struct SuiteConfig {
    AlgebraDescriptor algebra{std::vector<int>{3, 2}};
    int rank = 3;
    std::uint64_t seed = 42;
    int cases = 100;
    double theta1 = 0.1;
    double theta2 = 0.1;
    /// Runs the suite's deliberately broken variant. Every suite must fail
    /// under it; used as a regression guard for the checks themselves.
    bool mutate = false;
};

struct CheckSummary {
    std::string name;
    /// Worst measured value over all evaluations.
    double worst = 0.0;
    double threshold = 0.0;
    int evaluations = 0;
    int failures = 0;
};

struct CaseFailure {
    std::size_t case_index = 0;
    std::uint64_t case_seed = 0;
    std::string check;
    double measured = 0.0;
    double threshold = 0.0;
    /// Serialized inputs of the failing evaluation.
    Json payload;
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    /// Module the suite actually ran on; differs from the configured one for
    /// suites that need a single-block algebra.
    ModuleSpace space;
    std::size_t cases_run = 0;
    std::vector<CheckSummary> checks;
    /// First failures in case order; the per-check counts hold the totals.
    std::vector<CaseFailure> failures;
    std::vector<std::pair<std::string, Json>> parameters;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    bool passed() const;
    const CheckSummary* check(std::string_view name) const;
};

/// Collects the evaluations of one case into a report.
class CaseRecorder {
public:
    static constexpr std::size_t kMaxStoredFailures = 8;

    CaseRecorder(SuiteReport& report, std::size_t case_index, std::uint64_t case_seed);

    std::size_t case_index() const noexcept { return case_index_; }
    std::uint64_t case_seed() const noexcept { return case_seed_; }

    /// Records measured <= threshold. The payload is built only on failure.
    bool check_le(std::string_view name, double measured, double threshold,
                  const std::function<Json()>& payload = {});
    /// Records a boolean outcome as measured 0 (pass) or 1 (fail) against threshold 0.
    bool check(std::string_view name, bool ok, const std::function<Json()>& payload = {});
    /// Counts an observation that is reported but not asserted.
    void tally(std::string_view key, bool hit);

private:
    SuiteReport& report_;
    std::size_t case_index_;
    std::uint64_t case_seed_;
};

// Instance generators shared by the suites and the command-line front end.

struct PairInstance {
    ModuleOperator t;
    ModuleOperator s;
    /// Ground truth when the pair is preserving by construction.
    std::optional<CentralElement> gamma;
};

/// S random invertible, gamma random invertible central, T = gamma (S*)^{-1},
/// so that <Tx, Sy> = gamma <x, y>.
PairInstance make_preserving_pair(const ModuleSpace& space, Rng& rng);
/// x -> x w in every slot with w = 1 + 0.5 g / |g| for a Gaussian g.
ModuleOperator coefficient_twist(const ModuleSpace& space, Rng& rng);
/// A preserving pair with T replaced by T o W for a coefficient twist W.
PairInstance make_corrupted_pair(const ModuleSpace& space, Rng& rng);
PairInstance make_random_pair(const ModuleSpace& space, Rng& rng);
/// T = S = id, gamma = 1.
PairInstance make_identity_pair(const ModuleSpace& space);
/// T0 + D with |D| <= theta smin(T0 + D), for a random direction D.
ModuleOperator perturb(const ModuleOperator& t0, double theta, Rng& rng);
/// A preserving pair with T perturbed by theta1 and S by theta2.
PairInstance make_perturbed_pair(const ModuleSpace& space, Rng& rng, double theta1, double theta2);

/// theta1 theta2 + theta1 (theta2 + 1) + (theta1 + 1) theta2.
double perturbation_epsilon(double theta1, double theta2);

const std::vector<std::string>& suite_names();
bool is_suite_name(std::string_view name);

SuiteReport suite_lemma_equivalences(const SuiteConfig& config);
SuiteReport suite_identity_pairing(const SuiteConfig& config);
SuiteReport suite_invertible_pair(const SuiteConfig& config);
SuiteReport suite_isometry_pair(const SuiteConfig& config);
SuiteReport suite_perturbation(const SuiteConfig& config);
SuiteReport suite_real_rank_zero(const SuiteConfig& config);
SuiteReport suite_local_maps(const SuiteConfig& config);

/// Throws InvalidArgument for unknown names.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);
/// Re-runs a single case; its discrepancies reproduce the ones in the full run.
SuiteReport replay_case(std::string_view name, const SuiteConfig& config, std::size_t case_index);

/// Structured form with a fixed field order; wall-time only when timing is set.
Json to_json(const SuiteReport& report, bool timing = false);
std::string render_text(const SuiteReport& report, bool timing = false);

}  // namespace orthopair
