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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <optional>

#include "commands.hpp"
#include "qbell/errors.hpp"
#include "qbell/json_io.hpp"

namespace qbell {
namespace {

const std::filesystem::path kFixtures = QBELL_FIXTURE_DIR;

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qbell_io_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::optional<ErrorCode> code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

TEST(JsonIo, CorrelationRoundTrip) {
  const Correlation c = correlation_from_json(read_json_file(kFixtures / "tsirelson33.json"));
  EXPECT_EQ(c.n(), 3U);
  EXPECT_EQ(c.m(), 3U);
  const Correlation back = correlation_from_json(to_json(c));
  EXPECT_EQ(back.values(), c.values());
}

TEST(JsonIo, MalformedInputs) {
  EXPECT_EQ(code_of([] { read_json_file(scratch("bad.json", "{ not json")); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/qbell.json"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { correlation_from_json(Json::parse(R"({"n": 2, "m": 2, "c": [[1, 0]]})")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { correlation_from_json(Json::parse(R"({"n": 1, "m": 1, "c": [["x"]]})")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { system_from_json(Json::parse(R"({"vars": ["x"], "ineqs": [{"coeffs": {"y": "1"}, "rhs": "0"}]})")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0, 5]]})")); }),
            ErrorCode::kParseError);
}

TEST(JsonIo, SystemRoundTripIsExact) {
  LinSystem s({"x", "y"});
  s.add({{Rational(1, 3), Rational(-2, 7)}, Rational(5, 11)});
  const LinSystem back = system_from_json(to_json(s));
  EXPECT_EQ(back.variables(), s.variables());
  EXPECT_EQ(back.inequalities(), s.inequalities());
}

TEST(JsonIo, PolytopeFiles) {
  const HPolytope h = hpolytope_from_json(read_json_file(kFixtures / "square.json"));
  EXPECT_EQ(h.dim, 2U);
  EXPECT_EQ(h.ineqs.size(), 4U);
  const VPolytope v = vpolytope_from_json(read_json_file(kFixtures / "square_v.json"));
  EXPECT_EQ(v.vertices.size(), 4U);
  EXPECT_EQ(vpolytope_from_json(to_json(v)), v);
  EXPECT_TRUE(compare_facets(hpolytope_from_json(to_json(h)), h).empty());
}

TEST(JsonIo, BehaviorTable) {
  const BehaviorTable b = behavior_from_json(read_json_file(kFixtures / "behavior_correlated.json"));
  const FullCorrelator f = correlators_from_behavior(b, 1e-9);
  for (const auto& row : f.joint) {
    for (double v : row) EXPECT_NEAR(v, 1.0, 1e-12);
  }
  for (double v : f.alice) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(Cli, MemberScenarios) {
  const auto cor33 = cli::cmd_member(kFixtures / "tsirelson33.json", "cor33", 1e-7);
  EXPECT_TRUE(cor33.status == "member" || cor33.status == "boundary");
  EXPECT_NEAR(cor33.details["margin"].get<double>(), 0.0, 1e-6);

  const auto pr = cli::cmd_member(kFixtures / "pr.json", "cor2m", 1e-7);
  EXPECT_EQ(pr.status, "nonmember");
  EXPECT_FALSE(pr.details["violated"].empty());

  const auto ones = cli::cmd_member(kFixtures / "ones.json", "cor33", 1e-7);
  EXPECT_NE(ones.status, "nonmember");
  EXPECT_NE(ones.status, "fail");
  ASSERT_TRUE(ones.details.contains("witness"));

  const auto relax = cli::cmd_member(kFixtures / "pr33.json", "cut-relax", 1e-7);
  EXPECT_EQ(relax.status, "nonmember");
  EXPECT_EQ(relax.details["facets"].get<std::size_t>(), 90U);

  const auto behavior = cli::cmd_member(kFixtures / "behavior_correlated.json", "cor2m", 1e-7);
  EXPECT_NE(behavior.status, "fail");
}

TEST(Cli, MemberRejectsWrongShape) {
  EXPECT_THROW(cli::cmd_member(kFixtures / "pr.json", "cor33", 1e-7), Error);
  EXPECT_THROW(cli::cmd_member(kFixtures / "square.json", "cor2m", 1e-7), Error);
}

TEST(Cli, Derive) {
  const auto cor2m = cli::cmd_derive("cor2m", 2);
  EXPECT_EQ(cor2m.status, "pass");
  EXPECT_EQ(cor2m.details["inequalities"].get<std::size_t>(), 16U);
  const auto lemma4 = cli::cmd_derive("lemma4", 3);
  EXPECT_EQ(lemma4.status, "pass");
  EXPECT_EQ(lemma4.details["lemma2_vertices"], lemma4.details["tlm_vertices"]);
  EXPECT_THROW(cli::cmd_derive("lemma9", 2), Error);
}

TEST(Cli, PolytopeCommands) {
  EXPECT_EQ(cli::cmd_vertices(kFixtures / "square.json").details["count"].get<std::size_t>(), 4U);
  EXPECT_EQ(cli::cmd_facets(kFixtures / "simplex_v.json").status, "pass");
  EXPECT_EQ(cli::cmd_compare(kFixtures / "square.json", kFixtures / "square_redundant.json").status, "pass");
  EXPECT_EQ(cli::cmd_compare(kFixtures / "square.json", kFixtures / "square_v.json").status, "pass");
  EXPECT_EQ(cli::cmd_compare(kFixtures / "square.json", kFixtures / "simplex_v.json").status, "fail");
  const auto cut = cli::cmd_cut(kFixtures / "k33.json", true, CutVariant::kZeroOne);
  EXPECT_EQ(cut.details["vertices"].get<std::size_t>(), 32U);
  EXPECT_EQ(cut.details["facets"].get<std::size_t>(), 90U);
  EXPECT_EQ(cli::cmd_metric(kFixtures / "k3.json").status, "pass");
}

TEST(Cli, ExitCodes) {
  const cli::RunReport boundary{"x", "boundary", Json::object(), 0.0};
  const cli::RunReport member{"x", "member", Json::object(), 0.0};
  const cli::RunReport nonmember{"x", "nonmember", Json::object(), 0.0};
  const cli::RunReport fail{"x", "fail", Json::object(), 0.0};
  EXPECT_EQ(cli::exit_code(boundary, false), 0);
  EXPECT_EQ(cli::exit_code(boundary, true), 1);
  EXPECT_EQ(cli::exit_code(member, true), 0);
  EXPECT_EQ(cli::exit_code(nonmember, false), 1);
  EXPECT_EQ(cli::exit_code(fail, false), 1);
}

TEST(Cli, ReportsAreDeterministic) {
  const auto a = cli::cmd_member(kFixtures / "tsirelson33.json", "cor33", 1e-7).to_json(false).dump();
  const auto b = cli::cmd_member(kFixtures / "tsirelson33.json", "cor33", 1e-7).to_json(false).dump();
  EXPECT_EQ(a, b);
  EXPECT_FALSE(cli::cmd_sample(3, 3, 4, 7).to_json(false).contains("timing"));
  EXPECT_EQ(cli::cmd_sample(3, 3, 4, 7).to_json(false).dump(), cli::cmd_sample(3, 3, 4, 7).to_json(false).dump());
}

}  // namespace
}  // namespace qbell
