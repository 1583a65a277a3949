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

#include "orthopair/instance.hpp"

#include <array>

namespace orthopair {

namespace {

constexpr std::array<std::pair<InstanceKind, std::string_view>, 5> kKinds = {{
    {InstanceKind::Preserving, "preserving"},
    {InstanceKind::Corrupted, "corrupted"},
    {InstanceKind::Random, "random"},
    {InstanceKind::Perturbed, "perturbed"},
    {InstanceKind::Identity, "identity"},
}};

}  // namespace

std::string_view instance_kind_name(InstanceKind kind) noexcept {
    for (const auto& [k, name] : kKinds) {
        if (k == kind) {
            return name;
        }
    }
    return "random";
}

InstanceKind parse_instance_kind(std::string_view name) {
    for (const auto& [k, n] : kKinds) {
        if (n == name) {
            return k;
        }
    }
    throw Error(Errc::InvalidArgument,
                "unknown instance kind '" + std::string(name) + "'; expected preserving, corrupted, random, "
                                                                 "perturbed or identity");
}

InstanceFile generate_instance(const AlgebraDescriptor& algebra, int rank, InstanceKind kind, std::uint64_t seed,
                               double theta1, double theta2) {
    InstanceFile out;
    out.algebra = algebra;
    out.rank = rank;
    out.kind = kind;
    out.seed = seed;
    const ModuleSpace space(algebra, rank);
    Rng rng(seed);
    PairInstance pair;
    switch (kind) {
        case InstanceKind::Preserving: pair = make_preserving_pair(space, rng); break;
        case InstanceKind::Corrupted: pair = make_corrupted_pair(space, rng); break;
        case InstanceKind::Random: pair = make_random_pair(space, rng); break;
        case InstanceKind::Identity: pair = make_identity_pair(space); break;
        case InstanceKind::Perturbed:
            pair = make_perturbed_pair(space, rng, theta1, theta2);
            out.theta1 = theta1;
            out.theta2 = theta2;
            break;
    }
    out.t = std::move(pair.t);
    out.s = std::move(pair.s);
    out.gamma = std::move(pair.gamma);
    return out;
}

Json to_json(const InstanceFile& instance) {
    Json out = Json::object();
    out["blocks"] = to_json(instance.algebra);
    out["rank"] = instance.rank;
    out["kind"] = std::string(instance_kind_name(instance.kind));
    out["seed"] = instance.seed;
    if (instance.theta1) {
        out["theta1"] = *instance.theta1;
    }
    if (instance.theta2) {
        out["theta2"] = *instance.theta2;
    }
    if (instance.gamma) {
        out["gamma"] = to_json(*instance.gamma);
    }
    if (instance.t) {
        out["T"] = to_json(*instance.t);
    }
    if (instance.s) {
        out["S"] = to_json(*instance.s);
    }
    return out;
}

InstanceFile instance_from_json(const Json& j) {
    if (!j.is_object()) {
        throw Error(Errc::ParseError, "instance must be an object");
    }
    InstanceFile out;
    const ModuleSpace space = space_from_json(j);
    out.algebra = space.algebra;
    out.rank = space.rank;
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) {
            throw Error(Errc::ParseError, "kind must be a string");
        }
        try {
            out.kind = parse_instance_kind(j["kind"].get<std::string>());
        } catch (const Error& e) {
            throw Error(Errc::ParseError, e.what());
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw Error(Errc::ParseError, "seed must be a non-negative integer");
        }
        out.seed = j["seed"].get<std::uint64_t>();
    }
    for (const char* key : {"theta1", "theta2"}) {
        if (j.contains(key)) {
            if (!j[key].is_number()) {
                throw Error(Errc::ParseError, std::string(key) + " must be a number");
            }
            (key[5] == '1' ? out.theta1 : out.theta2) = j[key].get<double>();
        }
    }
    if (j.contains("gamma")) {
        out.gamma = central_from_json(j["gamma"], out.algebra);
    }
    if (j.contains("T")) {
        out.t = operator_from_json(j["T"], space, space);
    }
    if (j.contains("S")) {
        out.s = operator_from_json(j["S"], space, space);
    }
    return out;
}

std::string save_instance(const InstanceFile& instance) { return to_json(instance).dump(2) + "\n"; }

InstanceFile load_instance(std::string_view text) { return instance_from_json(parse_document(text)); }

}  // namespace orthopair
