// Copyright 2026 The qbell Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qbell/chordal.hpp"
#include "qbell/corsets.hpp"
#include "qbell/linsys.hpp"
#include "qbell/polytope.hpp"

namespace qbell {

using Json = nlohmann::ordered_json;

// All readers throw kParseError on malformed input.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& value);

// {"n": 3, "m": 3, "c": [[...], ...]}
Correlation correlation_from_json(const Json& j);
Json to_json(const Correlation& c);

// {"n": .., "m": .., "p": {"a,b,x,y": value}}, outcomes +-1, settings 0-based.
BehaviorTable behavior_from_json(const Json& j);
Json to_json(const BehaviorTable& b);

// {"dim": 6, "entries": [[i, j, value], ...]}
PartialSymMatrix partial_matrix_from_json(const Json& j);
Json to_json(const PartialSymMatrix& p);

// {"vertices": 6, "edges": [[0, 3], ...]}
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

// {"vars": [...], "ineqs": [{"coeffs": {"c11": "1"}, "rhs": "1"}]}; rationals
// as "p/q" strings, zero coefficients omitted.
LinSystem system_from_json(const Json& j);
Json to_json(const LinSystem& s);

// Same layout as a system, plus an optional "equations" list. Variables
// default to x1..xd when written.
HPolytope hpolytope_from_json(const Json& j);
Json to_json(const HPolytope& p, const std::vector<std::string>& variables = {});

// {"dim": 2, "vertices": [["0", "1/2"], ...]}
VPolytope vpolytope_from_json(const Json& j);
Json to_json(const VPolytope& p);

Json to_json(const SymMatrix& m);
Json to_json(const Cor33Witness& w);

}  // namespace qbell
