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

#include <cstdint>
#include <filesystem>
#include <string>

#include "qbell/json_io.hpp"
#include "qbell/polytope.hpp"

namespace qbell::cli {

// Outcome of one CLI invocation. status is one of pass, fail, member,
// nonmember, boundary.
struct RunReport {
  std::string command;
  std::string status;
  Json details = Json::object();
  double timing = 0.0;

  Json to_json(bool with_timing = true) const;
};

// 0 for pass/member/boundary (member only under strict), 1 otherwise.
int exit_code(const RunReport& report, bool strict_member);

// scenario: cor2m, cor33 or cut-relax. The input holds a correlation or a
// behaviour table (the joint correlators are then extracted).
RunReport cmd_member(const std::filesystem::path& input, const std::string& scenario, double tol);

// name: lemma2, lemma4 or cor2m (m Bob settings).
RunReport cmd_derive(const std::string& name, std::size_t m);

RunReport cmd_vertices(const std::filesystem::path& hrep);
RunReport cmd_facets(const std::filesystem::path& vrep);
// Each file may hold an H- or a V-representation.
RunReport cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b);
RunReport cmd_cut(const std::filesystem::path& graph, bool facets, CutVariant variant);
RunReport cmd_metric(const std::filesystem::path& graph);

RunReport cmd_sample(std::size_t n, std::size_t m, std::size_t dim, std::uint64_t seed);

}  // namespace qbell::cli
