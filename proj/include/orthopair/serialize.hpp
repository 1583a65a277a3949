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

#include <json.hpp>

#include "orthopair/characterize.hpp"

namespace orthopair {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const AlgebraDescriptor& d);
Json to_json(const AlgebraElement& a);
/// Array of [re, im], one per block.
Json to_json(const CentralElement& gamma);
Json to_json(const ModuleSpace& space);
Json to_json(const ModuleElement& x);
Json to_json(const ModuleOperator& t);
Json to_json(const GeneralLinearMap& l);
Json to_json(const Witness& w);
Json to_json(const CharacterizationResult& c);
Json to_json(const Verdict& v);

// Parsers throw Error(ParseError) on malformed documents and on shape
// mismatches against the expected algebra or space.
Complex complex_from_json(const Json& j);
AlgebraDescriptor descriptor_from_json(const Json& j);
AlgebraElement algebra_element_from_json(const Json& j, const AlgebraDescriptor& d);
CentralElement central_from_json(const Json& j, const AlgebraDescriptor& d);
ModuleSpace space_from_json(const Json& j);
ModuleElement module_element_from_json(const Json& j, const ModuleSpace& space);
ModuleOperator operator_from_json(const Json& j, const ModuleSpace& domain, const ModuleSpace& codomain);
GeneralLinearMap linear_map_from_json(const Json& j);
Witness witness_from_json(const Json& j, const ModuleSpace& space);

/// Parses text into a document; ParseError on syntax errors.
Json parse_document(std::string_view text);

}  // namespace orthopair
