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

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qbell/errors.hpp"

namespace {

bool is_input_error(qbell::ErrorCode code) {
  using qbell::ErrorCode;
  return code == ErrorCode::kParseError || code == ErrorCode::kInvalidArgument ||
         code == ErrorCode::kOutOfRange || code == ErrorCode::kNotNormalized ||
         code == ErrorCode::kSignallingDetected;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qbell::cli;

  CLI::App app{"qbell: quantum correlation sets, Bell inequalities and cut polytopes"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-7;
  std::uint64_t seed = 1;
  std::string out;
  bool no_timing = false;
  bool strict_member = false;
  app.add_option("--tol", tol, "Membership tolerance")->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--out", out, "Write the JSON report to this file");
  app.add_flag("--no-timing", no_timing, "Omit the timing field");
  app.add_flag("--strict-member", strict_member, "Exit 0 only on member or pass");

  std::function<RunReport()> action;

  auto* member = app.add_subcommand("member", "Membership test for a correlation or behaviour file");
  std::string scenario = "cor33";
  std::string input;
  member->add_option("--scenario", scenario)->check(CLI::IsMember({"cor2m", "cor33", "cut-relax"}))
      ->capture_default_str();
  member->add_option("file", input)->required();
  member->callback([&] { action = [&] { return cmd_member(input, scenario, tol); }; });

  auto* derive = app.add_subcommand("derive", "Run a derivation pipeline");
  std::string name;
  std::size_t m = 2;
  derive->add_option("name", name)->required()->check(CLI::IsMember({"lemma2", "lemma4", "cor2m"}));
  derive->add_option("--m", m, "Bob settings for cor2m")->capture_default_str();
  derive->callback([&] { action = [&] { return cmd_derive(name, m); }; });

  auto* polytope = app.add_subcommand("polytope", "Polytope conversions and generators");
  polytope->require_subcommand(1);
  std::string file_a;
  std::string file_b;
  auto* vertices = polytope->add_subcommand("vertices", "Vertices of an H-representation");
  vertices->add_option("file", file_a)->required();
  vertices->callback([&] { action = [&] { return cmd_vertices(file_a); }; });
  auto* facets = polytope->add_subcommand("facets", "Facets of a V-representation");
  facets->add_option("file", file_a)->required();
  facets->callback([&] { action = [&] { return cmd_facets(file_a); }; });
  auto* compare = polytope->add_subcommand("compare", "Compare two polytopes by their vertices");
  compare->add_option("a", file_a)->required();
  compare->add_option("b", file_b)->required();
  compare->callback([&] { action = [&] { return cmd_compare(file_a, file_b); }; });
  auto* cut = polytope->add_subcommand("cut", "Cut polytope of a graph");
  bool with_facets = false;
  std::string variant = "zero-one";
  cut->add_option("--graph", file_a)->required();
  cut->add_flag("--facets", with_facets, "Also enumerate facets");
  cut->add_option("--variant", variant)->check(CLI::IsMember({"zero-one", "plus-minus-one"}))->capture_default_str();
  cut->callback([&] {
    action = [&] {
      return cmd_cut(file_a, with_facets,
                     variant == "zero-one" ? qbell::CutVariant::kZeroOne : qbell::CutVariant::kPlusMinusOne);
    };
  });
  auto* metric = polytope->add_subcommand("metric", "Cycle inequalities of a graph");
  metric->add_option("--graph", file_a)->required();
  metric->callback([&] { action = [&] { return cmd_metric(file_a); }; });

  auto* sample = app.add_subcommand("sample", "Correlation of random unit vectors");
  std::size_t n_settings = 3;
  std::size_t m_settings = 3;
  std::size_t dim = 6;
  sample->add_option("--n", n_settings)->capture_default_str();
  sample->add_option("--m", m_settings)->capture_default_str();
  sample->add_option("--dim", dim)->capture_default_str();
  sample->callback([&] { action = [&] { return cmd_sample(n_settings, m_settings, dim, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = action();
  } catch (const qbell::Error& e) {
    std::cerr << "qbell: " << e.what() << '\n';
    if (is_input_error(e.code())) return 2;
    report = {app.get_subcommands().front()->get_name(), "fail",
              {{"error", std::string(qbell::to_string(e.code()))}, {"message", e.what()}}, 0.0};
  }
  report.timing = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report.to_json(!no_timing).dump(2);
  if (out.empty()) {
    std::cout << text << '\n';
  } else {
    try {
      qbell::write_json_file(out, report.to_json(!no_timing));
    } catch (const qbell::Error& e) {
      std::cerr << "qbell: " << e.what() << '\n';
      return 2;
    }
    std::cout << report.command << ": " << report.status << '\n';
  }
  return exit_code(report, strict_member);
}
