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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "oracles.hpp"
#include "qbell/chordal.hpp"
#include "qbell/corsets.hpp"
#include "qbell/errors.hpp"
#include "qbell/fme.hpp"
#include "qbell/numkernel.hpp"
#include "qbell/polytope.hpp"
#include "tightness.hpp"

namespace {

using namespace qbell;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome lemma4_equivalence() {
  const VPolytope a = h_to_v(to_hpolytope(build_named_system("lemma2")));
  const VPolytope b = h_to_v(to_hpolytope(build_named_system("tlm_full")));
  return {a == b, fmt("lemma2 %zu vertices, tlm_full %zu vertices", a.vertices.size(), b.vertices.size())};
}

Outcome lemma2_derivation() {
  const EliminationChain chain = eliminate(build_named_system("cor33_angles"), {"alpha", "beta", "gamma"});
  const LinSystem target = build_named_system("lemma2");
  const bool ok = mutually_implies(chain.projection(), target);
  std::string sizes;
  for (const auto& s : chain.stages) sizes += (sizes.empty() ? "" : " -> ") + std::to_string(s.size());
  return {ok, "stage sizes " + sizes + ", target " + std::to_string(target.size()) + " inequalities"};
}

Outcome cut_relaxation() {
  const HPolytope cut = v_to_h(cut_polytope_vertices({Graph::complete_bipartite(3, 3), CutVariant::kZeroOne}));
  HPolytope tlm = to_hpolytope(build_named_system("tlm_full"));
  const FacetDiff diff = compare_facets(cut, tlm);
  std::string detail = fmt("cut facets %zu, tlm_full %zu, only in cut %zu, only in tlm_full %zu", cut.ineqs.size(),
                           tlm.ineqs.size(), diff.only_left.size(), diff.only_right.size());
  for (const auto& h : diff.only_left) {
    detail += "\n    cut only:";
    for (const auto& a : h.a) detail += " " + to_string(a);
    detail += " <= " + to_string(h.b);
  }
  for (const auto& h : diff.only_right) {
    detail += "\n    tlm only:";
    for (const auto& a : h.a) detail += " " + to_string(a);
    detail += " <= " + to_string(h.b);
  }
  return {diff.empty(), detail};
}

Outcome inclusion_chain() {
  const HPolytope cut = v_to_h(cut_polytope_vertices({Graph::complete_bipartite(3, 3), CutVariant::kZeroOne}));
  std::size_t lemma3_bad = 0, cor33_bad = 0, cut_bad = 0;
  double worst_lemma3 = kPi, worst_cut = 1.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Correlation c = sample_quantum(3, 3, 6, seed);
    const AngleMatrix a = to_angles(c);
    double least = kPi;
    for (const auto& r : lemma3_check(a)) least = std::min(least, r.residual);
    worst_lemma3 = std::min(worst_lemma3, least);
    if (least < -1e-9) ++lemma3_bad;
    if (cor33_feasibility(c, 1e-7).status == MembershipStatus::kNonmember) ++cor33_bad;
    double slack = 1.0;
    for (const auto& h : cut.ineqs) {
      double lhs = 0.0;
      for (std::size_t i = 0; i < 9; ++i) lhs += h.a[i].get_d() * a.radians[i] / kPi;
      slack = std::min(slack, h.b.get_d() - lhs);
    }
    worst_cut = std::min(worst_cut, slack);
    if (slack < -1e-9) ++cut_bad;
  }
  return {lemma3_bad == 0 && cor33_bad == 0 && cut_bad == 0,
          fmt("1000 points: lemma3 failures %zu (min residual %.3g), cor33 rejections %zu, cut failures %zu "
              "(min slack %.3g)",
              lemma3_bad, worst_lemma3, cor33_bad, cut_bad, worst_cut)};
}

Outcome known_points() {
  const double r = 1.0 / std::sqrt(2.0);
  const Correlation tsirelson = Correlation::from_rows({{r, r}, {r, -r}});
  const double arc = arcsin_residual(tsirelson);
  const AngleMatrix ta = to_angles(tsirelson);
  double tlm_gap = kPi;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) tlm_gap = std::min(tlm_gap, std::abs(tlm_residual(ta, x, 1 - x, y, 1 - y)));
  }
  const bool tsirelson_ok = std::abs(arc) <= 1e-9 && tlm_gap <= 1e-9;

  const Correlation pr = Correlation::from_rows({{1, 1}, {1, -1}});
  const AngleMatrix pa = to_angles(pr);
  Rational pr_min(1000);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) pr_min = std::min(pr_min, tlm_residual_exact(pa, x, 1 - x, y, 1 - y));
  }
  const bool pr_rejected = !cor2m_member(pr).member;
  const bool pr_ok = pr_min == Rational(-1) && pr_rejected;

  const Cor33Result ones = cor33_feasibility(Correlation(3, 3, std::vector<double>(9, 1.0)), 1e-7);
  const bool ones_ok = ones.status != MembershipStatus::kNonmember && std::abs(ones.margin) <= 1e-9;

  return {tsirelson_ok && pr_ok && ones_ok,
          fmt("tsirelson arcsin %.2e, tlm gap %.2e; pr tlm residual %s pi, cor2m rejects %d; all-ones %s margin %.2e",
              arc, tlm_gap, to_string(pr_min).c_str(), pr_rejected ? 1 : 0, to_string(ones.status).c_str(),
              ones.margin)};
}

Outcome lemma3_tightness() {
  bool all = true;
  std::string detail;
  for (const std::string family : {"box", "tlm", "diff,diff,diff", "diff,sum,sum", "sum,diff,sum", "sum,sum,diff"}) {
    const auto point = testing::find_tight_point(family, 3, 1e-7, 2026);
    bool ok = false;
    std::string line = "\n    " + family + ": ";
    if (point) {
      const Cor33Result r = cor33_feasibility(point->correlation, 1e-7);
      ok = std::abs(point->residual) <= 1e-6 && r.status != MembershipStatus::kNonmember;
      line += fmt("|residual| %.2e, cor33 %s", std::abs(point->residual), to_string(r.status).c_str());
    } else {
      line += "no point found";
    }
    all = all && ok;
    detail += line;
  }
  return {all, "six families" + detail};
}

SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2, 2);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
  }
  return m;
}

Outcome oracle_suites() {
  std::mt19937_64 rng(7);

  std::size_t dd_cases = 0, dd_bad = 0;
  while (dd_cases < 200) {
    const std::size_t dim = 1 + dd_cases % 4;
    const HPolytope p = testing::random_hpolytope(rng, dim, dim + 2 + dd_cases % 5);
    VPolytope v;
    try {
      v = h_to_v(p);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kUnbounded) continue;
      throw;
    }
    ++dd_cases;
    if (v != testing::brute_force_vertices(p)) ++dd_bad;
  }

  std::size_t fm_bad = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    RationalVector inside;
    const std::size_t vars = 2 + t % 4;
    const LinSystem s = testing::random_system(rng, vars, 4 + t % 8, inside);
    const std::string v = s.variables().back();
    const LinSystem projected = fm_eliminate(s, v);
    std::map<std::string, Rational> point;
    RationalVector proj_point;
    for (std::size_t i = 0; i + 1 < vars; ++i) {
      point[s.variables()[i]] = inside[i];
      proj_point.push_back(inside[i]);
    }
    bool ok = projected.satisfied_by(proj_point);
    try {
      const auto lifted = lift_witness(s, {v}, point);
      RationalVector full = proj_point;
      full.push_back(lifted.at(v));
      ok = ok && s.satisfied_by(full);
    } catch (const Error&) {
      ok = false;
    }
    // A random outside point is in the projection exactly when it lifts.
    RationalVector probe;
    std::map<std::string, Rational> probe_map;
    for (std::size_t i = 0; i + 1 < vars; ++i) {
      probe.push_back(testing::random_rational(rng, -3, 3));
      probe_map[s.variables()[i]] = probe.back();
    }
    bool lifts = true;
    try {
      lift_witness(s, {v}, probe_map);
    } catch (const Error&) {
      lifts = false;
    }
    ok = ok && lifts == projected.satisfied_by(probe);
    if (!ok) ++fm_bad;
  }

  std::size_t syl_cases = 0, syl_bad = 0;
  while (syl_cases < 1000) {
    const SymMatrix m = random_symmetric(rng, 4);
    if (std::abs(min_eigenvalue(m)) <= 1e-9) continue;
    ++syl_cases;
    if (sylvester_psd(m) != is_psd(m, 1e-9)) ++syl_bad;
  }

  std::size_t comp_bad = 0;
  std::normal_distribution<double> normal;
  for (std::size_t t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 6;
    const Graph g = testing::random_chordal_graph(rng, n);
    std::vector<Vector> vs(n, Vector(1 + t % 4));
    for (auto& v : vs) {
      for (auto& x : v) x = normal(rng);
      const double len = std::sqrt(inner(v, v));
      for (auto& x : v) x /= len;
    }
    PartialSymMatrix p(n);
    for (const auto& [i, j] : g.edges()) p.specify(i, j, inner(vs[i], vs[j]));
    const SymMatrix m = chordal_complete(p, 1e-9);
    bool ok = is_psd(m, 1e-9);
    for (const auto& [i, j, v] : p.entries()) ok = ok && m(i, j) == v;
    if (!ok) ++comp_bad;
  }

  return {dd_bad + fm_bad + syl_bad + comp_bad == 0,
          fmt("dd %zu/200 mismatches, fm %zu/200, sylvester %zu/1000, completion %zu/200", dd_bad, fm_bad, syl_bad,
              comp_bad)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lemma2 and tlm_full share vertices", lemma4_equivalence},
      {"angle elimination reproduces lemma2", lemma2_derivation},
      {"cut polytope facets equal tlm_full", cut_relaxation},
      {"quantum inclusion chain", inclusion_chain},
      {"known points", known_points},
      {"necessary conditions are tight", lemma3_tightness},
      {"oracle suites", oracle_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%.2fs)\n    %s\n", i + 1, criteria[i].first.c_str(), out.pass ? "PASS" : "FAIL",
                secs, out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
