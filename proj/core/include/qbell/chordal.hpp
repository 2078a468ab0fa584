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

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "qbell/numkernel.hpp"
#include "qbell/rational.hpp"

namespace qbell {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph. Edges are stored as (u, v) with u < v in sorted
// order, which fixes the coordinate order of every edge-indexed polytope.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {});

  static Graph complete(std::size_t n);
  // Vertices 0..n-1 on one side, n..n+m-1 on the other.
  static Graph complete_bipartite(std::size_t n, std::size_t m);
  static Graph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u][v]; }
  std::vector<std::size_t> neighbors(std::size_t v) const;
  // Position of edge {u, v} in edges(), or edges().size() if absent.
  std::size_t edge_index(std::size_t u, std::size_t v) const;

  void add_edge(std::size_t u, std::size_t v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adjacency_;
};

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination ordering (each vertex's later neighbours form a
  // clique) when chordal.
  std::vector<std::size_t> elimination_order;
  // A chordless cycle of length >= 4 when not chordal.
  std::vector<std::size_t> witness_cycle;
};

// Lexicographic BFS followed by a PEO check.
ChordalityResult is_chordal(const Graph& g);

inline constexpr std::size_t kMaxCliqueVertices = 16;

// All inclusion-maximal cliques, each sorted, list sorted lexicographically.
std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g);

// Partially specified symmetric matrix with unit diagonal. An off-diagonal
// entry is specified exactly when its pair is an edge of the pattern.
class PartialSymMatrix {
 public:
  explicit PartialSymMatrix(std::size_t dim);

  void specify(std::size_t i, std::size_t j, double value);

  std::size_t dim() const noexcept { return pattern_.vertex_count(); }
  const Graph& pattern() const noexcept { return pattern_; }
  bool specified(std::size_t i, std::size_t j) const { return i == j || pattern_.adjacent(i, j); }
  // Value of a specified entry; 1 on the diagonal.
  double value(std::size_t i, std::size_t j) const;
  // (i, j, value) triples with i < j, in edge order.
  std::vector<std::tuple<std::size_t, std::size_t, double>> entries() const;

 private:
  Graph pattern_;
  std::map<Edge, double> values_;
};

bool is_partial_psd(const PartialSymMatrix& p, double tol);

// Fills the unspecified entries of a partial psd matrix with chordal pattern.
// Vertices are added in reverse elimination order; every new entry (v, w) is
// set to M[w,K] M[K,K]^+ M[K,v] with K the already-placed neighbours of v,
// which is the determinant-maximizing choice. Specified entries are copied
// unchanged. Throws kNotChordal or kNotPartialPsd.
SymMatrix chordal_complete(const PartialSymMatrix& p, double tol);

}  // namespace qbell
