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
#include <string_view>

#include "orthopair/suites.hpp"

namespace orthopair {

enum class InstanceKind { Preserving, Corrupted, Random, Perturbed, Identity };

std::string_view instance_kind_name(InstanceKind kind) noexcept;
/// Throws InvalidArgument for unknown names.
InstanceKind parse_instance_kind(std::string_view name);

/// A self-contained pair instance. Preserving and identity instances carry
/// the ground-truth gamma used in their construction.
struct InstanceFile {
    AlgebraDescriptor algebra;
    int rank = 1;
    InstanceKind kind = InstanceKind::Random;
    std::uint64_t seed = 0;
    std::optional<double> theta1;
    std::optional<double> theta2;
    std::optional<ModuleOperator> t;
    std::optional<ModuleOperator> s;
    std::optional<CentralElement> gamma;

    ModuleSpace space() const { return {algebra, rank}; }
    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile generate_instance(const AlgebraDescriptor& algebra, int rank, InstanceKind kind, std::uint64_t seed,
                               double theta1 = 0.1, double theta2 = 0.1);

Json to_json(const InstanceFile& instance);
/// Reads the instance fields of a document and ignores everything else, so
/// reports that embed an instance load as well.
InstanceFile instance_from_json(const Json& j);

/// Pretty-printed document with a trailing newline. Doubles are written in
/// shortest round-trip form, so load(save(x)) == x bit for bit.
std::string save_instance(const InstanceFile& instance);
InstanceFile load_instance(std::string_view text);

}  // namespace orthopair
