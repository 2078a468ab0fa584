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

#include <random>

#include "oracles.hpp"
#include "qbell/chordal.hpp"
#include "qbell/errors.hpp"

namespace qbell {
namespace {

// Clique {0,1,2}, independent {3,4,5}, every cross edge.
Graph split_pattern() {
  Graph g(6, {{0, 1}, {0, 2}, {1, 2}});
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 3; y < 6; ++y) g.add_edge(x, y);
  }
  return g;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pos(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (std::size_t v : order) {
    std::vector<std::size_t> later;
    for (std::size_t w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    for (std::size_t a : later) {
      for (std::size_t b : later) {
        if (a != b && !g.adjacent(a, b)) return false;
      }
    }
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<std::size_t>& c) {
  const std::size_t k = c.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  }
  return true;
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
}

TEST(Chordal, Triangle) {
  const auto r = is_chordal(Graph::complete(3));
  EXPECT_TRUE(r.chordal);
  EXPECT_TRUE(is_perfect_elimination_order(Graph::complete(3), r.elimination_order));
}

TEST(Chordal, K33HasChordlessFourCycle) {
  const Graph g = Graph::complete_bipartite(3, 3);
  const auto r = is_chordal(g);
  EXPECT_FALSE(r.chordal);
  EXPECT_EQ(r.witness_cycle.size(), 4U);
  EXPECT_TRUE(is_chordless_cycle(g, r.witness_cycle));
}

TEST(Chordal, SplitPatternEndsInClique) {
  const Graph g = split_pattern();
  const auto r = is_chordal(g);
  ASSERT_TRUE(r.chordal);
  EXPECT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
  std::vector<std::size_t> tail(r.elimination_order.end() - 3, r.elimination_order.end());
  std::sort(tail.begin(), tail.end());
  EXPECT_EQ(tail, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Chordal, LongCycleWitness) {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}});
  const auto r = is_chordal(g);
  EXPECT_FALSE(r.chordal);
  EXPECT_TRUE(is_chordless_cycle(g, r.witness_cycle));
}

TEST(Chordal, RandomChordalGraphsRecognized) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing::random_chordal_graph(rng, 2 + static_cast<std::size_t>(t % 7));
    const auto r = is_chordal(g);
    ASSERT_TRUE(r.chordal);
    EXPECT_TRUE(is_perfect_elimination_order(g, r.elimination_order));
  }
}

TEST(Cliques, Examples) {
  using Sets = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(maximal_cliques(split_pattern()), (Sets{{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}}));
  EXPECT_EQ(maximal_cliques(Graph::complete(3)), (Sets{{0, 1, 2}}));
  EXPECT_EQ(maximal_cliques(Graph::path(3)), (Sets{{0, 1}, {1, 2}}));
  EXPECT_EQ(maximal_cliques(Graph::complete_bipartite(2, 2)).size(), 4U);
  EXPECT_THROW(maximal_cliques(Graph(17)), Error);
}

PartialSymMatrix split_partial(double alpha, double beta, double gamma, double c) {
  PartialSymMatrix p(6);
  p.specify(0, 1, alpha);
  p.specify(0, 2, beta);
  p.specify(1, 2, gamma);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 3; y < 6; ++y) p.specify(x, y, c);
  }
  return p;
}

TEST(PartialPsd, SingleEdgeIsBoxInequality) {
  for (double c : {-1.0, -0.5, 0.0, 0.9, 1.0}) {
    PartialSymMatrix p(2);
    p.specify(0, 1, c);
    EXPECT_TRUE(is_partial_psd(p, 1e-12));
  }
  for (double c : {-1.01, 1.5}) {
    PartialSymMatrix p(2);
    p.specify(0, 1, c);
    EXPECT_FALSE(is_partial_psd(p, 1e-12));
  }
}

TEST(PartialPsd, SplitPattern) {
  EXPECT_TRUE(is_partial_psd(split_partial(1, 1, 1, 1), 1e-9));
  EXPECT_FALSE(is_partial_psd(split_partial(1, 1, -1, 0), 1e-9));
}

TEST(Completion, RankForcedFill) {
  PartialSymMatrix p(3);
  p.specify(0, 1, 1.0);
  p.specify(1, 2, 1.0);
  const SymMatrix m = chordal_complete(p, 1e-9);
  EXPECT_DOUBLE_EQ(m(0, 2), 1.0);
}

TEST(Completion, ZeroFill) {
  PartialSymMatrix p(3);
  p.specify(0, 1, 0.0);
  p.specify(1, 2, 0.0);
  EXPECT_DOUBLE_EQ(chordal_complete(p, 1e-9)(0, 2), 0.0);
}

TEST(Completion, SplitPatternFromGramVectors) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  const Graph pattern = split_pattern();
  for (int t = 0; t < 50; ++t) {
    std::vector<Vector> vs(6, Vector(6));
    for (auto& v : vs) {
      for (auto& x : v) x = g(rng);
      const double n = std::sqrt(inner(v, v));
      for (auto& x : v) x /= n;
    }
    PartialSymMatrix p(6);
    for (const auto& [i, j] : pattern.edges()) p.specify(i, j, inner(vs[i], vs[j]));
    const SymMatrix m = chordal_complete(p, 1e-9);
    EXPECT_TRUE(is_psd(m, 1e-9));
    for (const auto& [i, j, v] : p.entries()) EXPECT_EQ(m(i, j), v);
  }
}

TEST(Completion, Errors) {
  PartialSymMatrix cycle(4);
  cycle.specify(0, 1, 0.5);
  cycle.specify(1, 2, 0.5);
  cycle.specify(2, 3, 0.5);
  cycle.specify(0, 3, 0.5);
  EXPECT_THROW(chordal_complete(cycle, 1e-9), Error);
  EXPECT_THROW(chordal_complete(split_partial(1, 1, -1, 0), 1e-9), Error);
}

TEST(Completion, RandomChordalInstances) {
  std::mt19937_64 rng(47);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 6);
    const Graph g = testing::random_chordal_graph(rng, n);
    const std::size_t rank = 1 + static_cast<std::size_t>(t % 4);
    std::vector<Vector> vs(n, Vector(rank));
    for (auto& v : vs) {
      for (auto& x : v) x = normal(rng);
      const double len = std::sqrt(inner(v, v));
      for (auto& x : v) x /= len;
    }
    PartialSymMatrix p(n);
    for (const auto& [i, j] : g.edges()) p.specify(i, j, inner(vs[i], vs[j]));
    const SymMatrix m = chordal_complete(p, 1e-9);
    EXPECT_TRUE(is_psd(m, 1e-9)) << "instance " << t;
    for (const auto& [i, j, v] : p.entries()) EXPECT_EQ(m(i, j), v);
  }
}

TEST(PartialPsd, MonotoneUnderConsistentCompletion) {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 5);
    const Graph g = testing::random_chordal_graph(rng, n);
    std::vector<Vector> vs(n, Vector(3));
    for (auto& v : vs) {
      for (auto& x : v) x = normal(rng);
      const double len = std::sqrt(inner(v, v));
      for (auto& x : v) x /= len;
    }
    PartialSymMatrix p(n);
    for (const auto& [i, j] : g.edges()) p.specify(i, j, inner(vs[i], vs[j]));
    ASSERT_TRUE(is_partial_psd(p, 1e-9));
    // Adding one more entry taken from the same vectors keeps it partial psd.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (p.specified(i, j)) continue;
        PartialSymMatrix q = p;
        q.specify(i, j, inner(vs[i], vs[j]));
        EXPECT_TRUE(is_partial_psd(q, 1e-9));
        i = n;
        break;
      }
    }
  }
}

}  // namespace
}  // namespace qbell
