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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qbell/corsets.hpp"
#include "qbell/errors.hpp"
#include "qbell/fme.hpp"

namespace qbell::cli {

namespace {

Correlation load_correlation(const std::filesystem::path& input) {
  const Json j = read_json_file(input);
  if (j.is_object() && j.contains("p")) {
    const FullCorrelator full = correlators_from_behavior(behavior_from_json(j), 1e-9);
    return Correlation::from_rows(full.joint);
  }
  return correlation_from_json(j);
}

std::string status_of(MembershipStatus s) { return to_string(s); }

Json reports_json(const std::vector<InequalityReport>& list) {
  Json out = Json::array();
  for (const auto& r : list) out.push_back({{"inequality", r.label}, {"residual", r.residual}});
  return out;
}

std::string describe(const Halfspace& h, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < h.a.size(); ++i) {
    const int sg = sgn(h.a[i]);
    if (sg == 0) continue;
    const Rational mag = abs(h.a[i]);
    s += sg < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
    if (mag != 1) s += to_string(mag) + "*";
    s += names[i];
  }
  return s + " <= " + to_string(h.b);
}

RunReport member_cor2m(const Correlation& c) {
  RunReport r{"member cor2m", "", {}, 0.0};
  if (c.n() != 2) raise(ErrorCode::kParseError, "the cor2m scenario needs n = 2");
  const Cor2mResult res = cor2m_member(c);
  r.status = res.member ? "member" : "nonmember";
  r.details = {{"violated", reports_json(res.violated)}, {"saturated", reports_json(res.saturated)}};
  return r;
}

RunReport member_cor33(const Correlation& c, double tol) {
  RunReport r{"member cor33", "", {}, 0.0};
  if (c.n() != 3 || c.m() != 3) raise(ErrorCode::kParseError, "the cor33 scenario needs a 3x3 correlation");
  const Cor33Result res = cor33_feasibility(c, tol);
  r.status = status_of(res.status);
  r.details = {{"margin", res.margin}, {"argmax", res.argmax}, {"tol", tol}};
  if (res.witness) r.details["witness"] = to_json(*res.witness);
  return r;
}

RunReport member_cut_relax(const Correlation& c, double tol) {
  RunReport r{"member cut-relax", "", {}, 0.0};
  const Graph g = Graph::complete_bipartite(c.n(), c.m());
  const HPolytope facets = v_to_h(cut_polytope_vertices({g, CutVariant::kZeroOne}));
  std::vector<double> point;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < c.n(); ++x) {
    for (std::size_t y = 0; y < c.m(); ++y) {
      point.push_back(std::acos(std::clamp(c(x, y), -1.0, 1.0)) / std::numbers::pi);
      names.push_back("c" + std::to_string(x + 1) + std::to_string(y + 1));
    }
  }
  double worst = std::numeric_limits<double>::infinity();
  Json violated = Json::array();
  for (const auto& h : facets.ineqs) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) lhs += h.a[i].get_d() * point[i];
    const double residual = h.b.get_d() - lhs;
    worst = std::min(worst, residual);
    if (residual < -tol) violated.push_back({{"facet", describe(h, names)}, {"residual", residual}});
  }
  r.status = worst < -tol ? "nonmember" : (worst <= tol ? "boundary" : "member");
  r.details = {{"facets", facets.ineqs.size()}, {"min_residual", worst}, {"violated", violated}};
  return r;
}

}  // namespace

Json RunReport::to_json(bool with_timing) const {
  Json out = {{"command", command}, {"status", status}, {"details", details}};
  if (with_timing) out["timing"] = timing;
  return out;
}

int exit_code(const RunReport& report, bool strict_member) {
  if (strict_member) return report.status == "member" || report.status == "pass" ? 0 : 1;
  return report.status == "pass" || report.status == "member" || report.status == "boundary" ? 0 : 1;
}

RunReport cmd_member(const std::filesystem::path& input, const std::string& scenario, double tol) {
  const Correlation c = load_correlation(input);
  if (scenario == "cor2m") return member_cor2m(c);
  if (scenario == "cor33") return member_cor33(c, tol);
  if (scenario == "cut-relax") return member_cut_relax(c, tol);
  raise(ErrorCode::kParseError, "unknown scenario '" + scenario + "'");
}

RunReport cmd_derive(const std::string& name, std::size_t m) {
  RunReport r{"derive " + name, "", {}, 0.0};
  if (name == "lemma2") {
    const LinSystem start = build_named_system("cor33_angles");
    const EliminationChain chain = eliminate(start, {"alpha", "beta", "gamma"});
    const LinSystem target = build_named_system("lemma2");
    Json sizes = Json::array();
    for (const auto& s : chain.stages) sizes.push_back(s.size());
    const bool equivalent = mutually_implies(chain.projection(), target);
    r.status = equivalent ? "pass" : "fail";
    r.details = {{"stage_sizes", sizes},
                 {"target_size", target.size()},
                 {"equivalent", equivalent},
                 {"system", to_json(chain.projection())}};
  } else if (name == "lemma4") {
    const LinSystem lemma2 = build_named_system("lemma2");
    const LinSystem tlm = build_named_system("tlm_full");
    const VPolytope a = h_to_v(to_hpolytope(lemma2));
    const VPolytope b = h_to_v(to_hpolytope(tlm));
    r.status = a == b ? "pass" : "fail";
    r.details = {{"lemma2_inequalities", lemma2.size()},
                 {"tlm_inequalities", tlm.size()},
                 {"lemma2_vertices", a.vertices.size()},
                 {"tlm_vertices", b.vertices.size()},
                 {"equal", a == b}};
  } else if (name == "cor2m") {
    const LinSystem s = build_named_system("cor2m", m);
    r.status = "pass";
    r.details = {{"m", m}, {"inequalities", s.size()}, {"system", to_json(s)}};
  } else {
    raise(ErrorCode::kParseError, "unknown derivation '" + name + "'");
  }
  return r;
}

RunReport cmd_vertices(const std::filesystem::path& hrep) {
  const HPolytope p = hpolytope_from_json(read_json_file(hrep));
  const VPolytope v = h_to_v(p);
  return {"polytope vertices", "pass", {{"count", v.vertices.size()}, {"vrep", to_json(v)}}, 0.0};
}

RunReport cmd_facets(const std::filesystem::path& vrep) {
  const HPolytope h = v_to_h(vpolytope_from_json(read_json_file(vrep)));
  return {"polytope facets",
          "pass",
          {{"facets", h.ineqs.size()}, {"equations", h.equations.size()}, {"hrep", to_json(h)}},
          0.0};
}

RunReport cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b) {
  const auto vertices_of = [](const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    if (j.is_object() && j.contains("vertices")) return vpolytope_from_json(j);
    return h_to_v(hpolytope_from_json(j));
  };
  const VPolytope x = vertices_of(a);
  const VPolytope y = vertices_of(b);
  const bool equal = polytopes_equal(x, y);
  return {"polytope compare",
          equal ? "pass" : "fail",
          {{"equal", equal}, {"left_vertices", x.vertices.size()}, {"right_vertices", y.vertices.size()}},
          0.0};
}

RunReport cmd_cut(const std::filesystem::path& graph, bool facets, CutVariant variant) {
  const Graph g = graph_from_json(read_json_file(graph));
  const VPolytope v = cut_polytope_vertices({g, variant});
  RunReport r{"polytope cut", "pass", {{"edges", g.edges().size()}, {"vertices", v.vertices.size()}}, 0.0};
  r.details["vrep"] = to_json(v);
  if (facets) {
    const HPolytope h = v_to_h(v);
    r.details["facets"] = h.ineqs.size();
    r.details["hrep"] = to_json(h);
  }
  return r;
}

RunReport cmd_metric(const std::filesystem::path& graph) {
  const Graph g = graph_from_json(read_json_file(graph));
  const HPolytope h = metric_polytope_h(g);
  return {"polytope metric",
          "pass",
          {{"chordless_cycles", chordless_cycles(g).size()}, {"inequalities", h.ineqs.size()}, {"hrep", to_json(h)}},
          0.0};
}

RunReport cmd_sample(std::size_t n, std::size_t m, std::size_t dim, std::uint64_t seed) {
  const Correlation c = sample_quantum(n, m, dim, seed);
  return {"sample", "pass", {{"seed", seed}, {"dim", dim}, {"correlation", to_json(c)}}, 0.0};
}

}  // namespace qbell::cli
