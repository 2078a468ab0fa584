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

#include <numbers>
#include <optional>
#include <random>

#include "oracles.hpp"
#include "qbell/corsets.hpp"
#include "qbell/errors.hpp"
#include "qbell/fme.hpp"
#include "qbell/polytope.hpp"

namespace qbell {
namespace {

HPolytope unit_square() {
  HPolytope p(2);
  p.add({{-1, 0}, 0});
  p.add({{1, 0}, 1});
  p.add({{0, -1}, 0});
  p.add({{0, 1}, 1});
  p.sort();
  return p;
}

VPolytope vertices(std::size_t dim, std::vector<RationalVector> vs) {
  VPolytope v(dim);
  v.vertices = std::move(vs);
  v.canonicalize();
  return v;
}

std::optional<ErrorCode> code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

TEST(HToV, Square) {
  EXPECT_EQ(h_to_v(unit_square()), vertices(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(HToV, RedundantRowsIgnored) {
  HPolytope p = unit_square();
  p.add({{1, 1}, 2});
  p.add({{1, 0}, 3});
  EXPECT_EQ(h_to_v(p), h_to_v(unit_square()));
}

TEST(HToV, EmptyAndUnbounded) {
  HPolytope empty(1);
  empty.add({{1}, 0});
  empty.add({{-1}, -1});
  EXPECT_EQ(code_of([&] { h_to_v(empty); }), ErrorCode::kEmpty);
  HPolytope ray(2);
  ray.add({{-1, 0}, 0});
  ray.add({{0, -1}, 0});
  ray.add({{0, 1}, 1});
  EXPECT_EQ(code_of([&] { h_to_v(ray); }), ErrorCode::kUnbounded);
  HPolytope slab(2);
  slab.add({{0, 1}, 1});
  slab.add({{0, -1}, 0});
  EXPECT_EQ(code_of([&] { h_to_v(slab); }), ErrorCode::kUnbounded);
}

TEST(HToV, Equations) {
  HPolytope segment(2);
  segment.add_equation({{1, 1}, 1});
  segment.add({{-1, 0}, 0});
  segment.add({{0, -1}, 0});
  EXPECT_EQ(h_to_v(segment), vertices(2, {{0, 1}, {1, 0}}));
}

TEST(VToH, Square) {
  const HPolytope h = v_to_h(vertices(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(compare_facets(h, unit_square()).empty());
  EXPECT_TRUE(h.equations.empty());
}

TEST(VToH, InteriorPointsDropped) {
  const HPolytope h = v_to_h(vertices(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {Rational(1, 2), Rational(1, 3)}}));
  EXPECT_EQ(h.ineqs.size(), 4U);
}

TEST(VToH, Simplex) {
  const HPolytope h = v_to_h(vertices(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  HPolytope expected(3);
  expected.add({{-1, 0, 0}, 0});
  expected.add({{0, -1, 0}, 0});
  expected.add({{0, 0, -1}, 0});
  expected.add({{1, 1, 1}, 1});
  EXPECT_TRUE(compare_facets(h, expected).empty());
}

TEST(VToH, LowerDimensional) {
  const HPolytope point = v_to_h(vertices(3, {{1, 2, 3}}));
  EXPECT_TRUE(point.ineqs.empty());
  EXPECT_EQ(point.equations.size(), 3U);
  EXPECT_TRUE(point.contains({1, 2, 3}));
  EXPECT_FALSE(point.contains({1, 2, 4}));

  const HPolytope segment = v_to_h(vertices(2, {{0, 0}, {2, 2}}));
  EXPECT_EQ(segment.equations.size(), 1U);
  EXPECT_EQ(segment.ineqs.size(), 2U);
  EXPECT_TRUE(segment.contains({1, 1}));
  EXPECT_FALSE(segment.contains({3, 3}));
  EXPECT_FALSE(segment.contains({1, 0}));

  EXPECT_EQ(code_of([] { v_to_h(VPolytope(2)); }), ErrorCode::kInvalidArgument);
}

TEST(Compare, ReportsDifferences) {
  HPolytope other = unit_square();
  other.ineqs.pop_back();
  other.add({{1, 1}, 2});
  const FacetDiff d = compare_facets(unit_square(), other);
  EXPECT_EQ(d.only_left.size(), 1U);
  EXPECT_EQ(d.only_right.size(), 1U);
  EXPECT_TRUE(polytopes_equal(unit_square(), vertices(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})));
}

TEST(DoubleDescription, MatchesBruteForceVertices) {
  std::mt19937_64 rng(107);
  int bounded = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t dim = 2 + static_cast<std::size_t>(t % 3);
    HPolytope p = testing::random_hpolytope(rng, dim, dim + 2 + static_cast<std::size_t>(t % 6));
    VPolytope v;
    try {
      v = h_to_v(p);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kUnbounded);
      continue;
    }
    ++bounded;
    EXPECT_EQ(v, testing::brute_force_vertices(p));
  }
  EXPECT_GT(bounded, 40);
}

TEST(DoubleDescription, MatchesBruteForceFacets) {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 80; ++t) {
    const std::size_t dim = 2 + static_cast<std::size_t>(t % 3);
    VPolytope v(dim);
    for (std::size_t i = 0; i < dim + 2 + static_cast<std::size_t>(t % 5); ++i) {
      RationalVector x(dim);
      for (auto& c : x) c = testing::random_rational(rng, -3, 3, 2);
      v.vertices.push_back(x);
    }
    v.canonicalize();
    const HPolytope h = v_to_h(v);
    if (!h.equations.empty()) continue;
    EXPECT_TRUE(compare_facets(h, testing::brute_force_facets(v)).empty());
  }
}

TEST(DoubleDescription, RoundTrip) {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 80; ++t) {
    const std::size_t dim = 2 + static_cast<std::size_t>(t % 3);
    HPolytope p = testing::random_hpolytope(rng, dim, dim + 3 + static_cast<std::size_t>(t % 5));
    VPolytope v;
    try {
      v = h_to_v(p);
    } catch (const Error&) {
      continue;
    }
    const HPolytope facets = v_to_h(v);
    EXPECT_EQ(h_to_v(facets), v);
    EXPECT_LE(facets.ineqs.size(), p.ineqs.size());
    EXPECT_EQ(v_to_h(h_to_v(facets)).ineqs, facets.ineqs);
  }
}

TEST(Cut, Triangle) {
  const VPolytope v = cut_polytope_vertices({Graph::complete(3), CutVariant::kZeroOne});
  EXPECT_EQ(v, vertices(3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  const HPolytope h = v_to_h(v);
  EXPECT_EQ(h.ineqs.size(), 4U);
  // The box rows are redundant for K3, so compare point sets.
  EXPECT_TRUE(polytopes_equal(metric_polytope_h(Graph::complete(3)), v));

  const VPolytope pm = cut_polytope_vertices({Graph::complete(3), CutVariant::kPlusMinusOne});
  EXPECT_EQ(pm, vertices(3, {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
}

TEST(Cut, SingleVertexAndTooLarge) {
  const VPolytope v = cut_polytope_vertices({Graph(1), CutVariant::kZeroOne});
  EXPECT_EQ(v.dim, 0U);
  EXPECT_EQ(v.vertices.size(), 1U);
  EXPECT_EQ(code_of([] { cut_polytope_vertices({Graph::complete(7), CutVariant::kZeroOne}); }), ErrorCode::kTooLarge);
  EXPECT_EQ(code_of([] { metric_polytope_h(Graph::path(11)); }), ErrorCode::kTooLarge);
}

TEST(Cut, TreeIsCube) {
  const Graph tree = Graph::path(4);
  const VPolytope v = cut_polytope_vertices({tree, CutVariant::kZeroOne});
  EXPECT_EQ(v.vertices.size(), 8U);
  const HPolytope h = v_to_h(v);
  EXPECT_EQ(h.ineqs.size(), 6U);
  EXPECT_TRUE(chordless_cycles(tree).empty());
  EXPECT_TRUE(compare_facets(h, metric_polytope_h(tree)).empty());
}

TEST(Cut, CompleteBipartiteThreeThree) {
  const Graph g = Graph::complete_bipartite(3, 3);
  const VPolytope v = cut_polytope_vertices({g, CutVariant::kZeroOne});
  EXPECT_EQ(v.vertices.size(), 32U);
  const auto cycles = chordless_cycles(g);
  EXPECT_EQ(cycles.size(), 9U);
  for (const auto& c : cycles) EXPECT_EQ(c.size(), 4U);
  const HPolytope met = metric_polytope_h(g);
  // 9 four-cycles times 8 odd subsets, plus 18 box rows.
  EXPECT_EQ(met.ineqs.size(), 9U * 8U + 18U);
  EXPECT_TRUE(compare_facets(v_to_h(v), met).empty());
}

TEST(Cut, CycleListingConvention) {
  const auto cycles = chordless_cycles(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
  ASSERT_EQ(cycles.size(), 1U);
  EXPECT_EQ(cycles[0], (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  // K4 has four triangles and no chordless 4-cycle.
  EXPECT_EQ(chordless_cycles(Graph::complete(4)).size(), 4U);
}

TEST(Cut, CutInsideMetric) {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 20; ++t) {
    Graph g(5);
    std::bernoulli_distribution coin(0.6);
    for (std::size_t u = 0; u < 5; ++u) {
      for (std::size_t w = u + 1; w < 5; ++w) {
        if (coin(rng)) g.add_edge(u, w);
      }
    }
    if (g.edges().empty()) continue;
    const HPolytope met = metric_polytope_h(g);
    for (const auto& x : cut_polytope_vertices({g, CutVariant::kZeroOne}).vertices) EXPECT_TRUE(met.contains(x));
  }
}

TEST(Cut, QuantumAnglesInsideMetricOfK33) {
  // c-hat / pi of any quantum correlation satisfies the cycle inequalities.
  const Graph g = Graph::complete_bipartite(3, 3);
  const HPolytope met = metric_polytope_h(g);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AngleMatrix a = to_angles(sample_quantum(3, 3, 6, seed));
    std::vector<double> x(g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const auto [u, w] = g.edges()[e];
      x[e] = a(u, w - 3) / std::numbers::pi;
    }
    for (const auto& h : met.ineqs) {
      double lhs = 0.0;
      for (std::size_t e = 0; e < x.size(); ++e) lhs += h.a[e].get_d() * x[e];
      EXPECT_LE(lhs, h.b.get_d() + 1e-9);
    }
  }
}

TEST(Conversions, LinSystemRoundTrip) {
  const LinSystem s = build_named_system("tlm_full");
  const HPolytope h = to_hpolytope(s);
  EXPECT_EQ(h.dim, 9U);
  EXPECT_EQ(h.ineqs.size(), s.size());
  EXPECT_TRUE(mutually_implies(to_linsystem(h, s.variables()), s));
}

}  // namespace
}  // namespace qbell
