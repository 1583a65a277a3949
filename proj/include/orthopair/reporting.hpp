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

#include "orthopair/instance.hpp"

namespace orthopair {

enum class ReportFormat { Text, Structured };

/// Exit-code contract shared by every command.
enum class Outcome { Pass = 0, Fail = 1, Invalid = 2, Inconclusive = 3 };

struct CommandResult {
    std::string output;
    Outcome outcome = Outcome::Pass;
    std::optional<VerdictKind> verdict;
};

Outcome outcome_of(VerdictKind kind) noexcept;

struct CheckOptions {
    std::uint64_t seed = 0;
    double tol = 1e-8;
};

/// Extracts gamma with per-projection diagnostics and decides the pair. A
/// witness found in the document (top level or under "report") is re-verified.
/// Structured output embeds the instance, so it can be fed back in.
CommandResult extract_report(const InstanceFile& instance, const Json& document, const CheckOptions& options,
                             ReportFormat format);

/// Decides the pair and, when the instance stores a gamma, checks it against
/// the characterization residual as well.
CommandResult verify_report(const InstanceFile& instance, const CheckOptions& options, ReportFormat format);

/// Runs the named suites ("all" expands to every suite). A case index replays
/// one case instead of the full run.
CommandResult suites_report(const std::vector<std::string>& names, const SuiteConfig& config, ReportFormat format,
                            bool timing, std::optional<std::size_t> case_index = std::nullopt);

/// Splits a comma-separated list; "all" expands to every suite. Throws
/// InvalidArgument naming the known suites on an unknown name.
std::vector<std::string> resolve_suite_names(std::string_view list);

}  // namespace orthopair
