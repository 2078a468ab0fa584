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

#include "qbell/chordal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <set>

#include "qbell/errors.hpp"

namespace qbell {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), adjacency_(vertex_count, std::vector<bool>(vertex_count, false)) {
  if (vertex_count == 0) raise(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::complete_bipartite(std::size_t n, std::size_t m) {
  Graph g(n + m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) g.add_edge(x, n + y);
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    raise(ErrorCode::kInvalidArgument, "edge references a missing vertex");
  }
  if (u == v) raise(ErrorCode::kInvalidArgument, "self-loops are not allowed");
  if (u > v) std::swap(u, v);
  if (adjacency_[u][v]) raise(ErrorCode::kInvalidArgument, "duplicate edge");
  adjacency_[u][v] = adjacency_[v][u] = true;
  const Edge e{u, v};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < vertex_count_; ++u) {
    if (adjacency_[v][u]) out.push_back(u);
  }
  return out;
}

std::size_t Graph::edge_index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

std::vector<std::size_t> lex_bfs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (visited[v]) continue;
      // Labels hold decreasing stamps, so lexicographic compare works directly.
      if (best == n || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (std::size_t u = 0; u < n; ++u) {
      if (!visited[u] && g.adjacent(best, u)) label[u].push_back(n - step);
    }
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> later;
    for (std::size_t u : g.neighbors(order[i])) {
      if (position[u] > i) later.push_back(u);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

// Any chordless cycle through v uses two non-adjacent neighbours u, w of v and
// an induced u-w path avoiding the rest of N[v]; the shortest such path is
// induced, so BFS finds a witness whenever one exists.
std::vector<std::size_t> find_chordless_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        const std::size_t u = nbrs[a];
        const std::size_t w = nbrs[b];
        if (g.adjacent(u, w)) continue;
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (std::size_t x : nbrs) blocked[x] = (x != u && x != w);
        std::vector<std::size_t> parent(n, n);
        std::deque<std::size_t> queue{u};
        parent[u] = u;
        while (!queue.empty() && parent[w] == n) {
          const std::size_t x = queue.front();
          queue.pop_front();
          for (std::size_t y : g.neighbors(x)) {
            if (blocked[y] || parent[y] != n) continue;
            if (y == w && x == u) continue;  // u, w non-adjacent anyway
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (parent[w] == n) continue;
        std::vector<std::size_t> cycle{v};
        for (std::size_t x = w; x != u; x = parent[x]) cycle.push_back(x);
        cycle.push_back(u);
        return cycle;
      }
    }
  }
  return {};
}

void bron_kerbosch(const Graph& g, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (std::size_t u : *set) {
      std::size_t count = 0;
      for (std::size_t v : p) count += g.adjacent(u, v) ? 1 : 0;
      if (count > best) {
        best = count;
        pivot = u;
      }
    }
  }
  const auto candidates = p;
  for (std::size_t v : candidates) {
    if (g.adjacent(pivot, v)) continue;
    std::vector<std::size_t> p2, x2;
    for (std::size_t u : p) {
      if (g.adjacent(v, u)) p2.push_back(u);
    }
    for (std::size_t u : x) {
      if (g.adjacent(v, u)) x2.push_back(u);
    }
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  ChordalityResult result;
  if (is_perfect_elimination_order(g, order)) {
    result.chordal = true;
    result.elimination_order = std::move(order);
  } else {
    result.witness_cycle = find_chordless_cycle(g);
  }
  return result;
}

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCliqueVertices) {
    raise(ErrorCode::kDimensionTooLarge, "clique enumeration is capped at 16 vertices");
  }
  std::vector<std::vector<std::size_t>> cliques;
  const auto chordality = is_chordal(g);
  if (chordality.chordal) {
    const auto& order = chordality.elimination_order;
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::vector<std::size_t>> candidates;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> c{order[i]};
      for (std::size_t u : g.neighbors(order[i])) {
        if (position[u] > i) c.push_back(u);
      }
      std::sort(c.begin(), c.end());
      candidates.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
        if (i == j) continue;
        const bool subset = std::includes(candidates[j].begin(), candidates[j].end(),
                                          candidates[i].begin(), candidates[i].end());
        if (subset && (candidates[j].size() > candidates[i].size() || j < i)) maximal = false;
      }
      if (maximal) cliques.push_back(candidates[i]);
    }
  } else {
    std::vector<std::size_t> r;
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    bron_kerbosch(g, r, all, {}, cliques);
  }
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  return cliques;
}

PartialSymMatrix::PartialSymMatrix(std::size_t dim) : pattern_(dim) {}

void PartialSymMatrix::specify(std::size_t i, std::size_t j, double value) {
  if (i == j) {
    if (value != 1.0) raise(ErrorCode::kInvalidArgument, "diagonal entries are fixed to 1");
    return;
  }
  if (i > j) std::swap(i, j);
  if (!pattern_.adjacent(i, j)) pattern_.add_edge(i, j);
  values_[{i, j}] = value;
}

double PartialSymMatrix::value(std::size_t i, std::size_t j) const {
  if (i == j) return 1.0;
  if (i > j) std::swap(i, j);
  auto it = values_.find({i, j});
  if (it == values_.end()) raise(ErrorCode::kInvalidArgument, "entry is not specified");
  return it->second;
}

std::vector<std::tuple<std::size_t, std::size_t, double>> PartialSymMatrix::entries() const {
  std::vector<std::tuple<std::size_t, std::size_t, double>> out;
  for (const auto& [e, v] : values_) out.emplace_back(e.first, e.second, v);
  return out;
}

namespace {

constexpr double kExactSlack = 1e-12;
constexpr double kShrinkMargin = 1e-12;

SymMatrix clique_block(const PartialSymMatrix& p, const std::vector<std::size_t>& clique) {
  SymMatrix block(clique.size());
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a; b < clique.size(); ++b) block.set(a, b, p.value(clique[a], clique[b]));
  }
  return block;
}

// Some solution of a z = b by exact elimination (free variables set to 0),
// or nothing when the system is inconsistent.
std::optional<RationalVector> solve_exact(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  RationalVector z(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) z[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return z;
}

// Determinant-maximizing completion in exact arithmetic of the partial
// matrix whose off-diagonal entries are multiplied by `shrink`. Returns the
// completed off-diagonal entries divided back by `shrink`, or nothing when
// some fill step has no consistent solution.
std::optional<SymMatrix> exact_completion(const PartialSymMatrix& p, const std::vector<std::size_t>& order,
                                          const Rational& shrink) {
  const std::size_t n = p.dim();
  std::vector<RationalVector> m(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (const auto& [i, j, v] : p.entries()) {
    m[i][j] = Rational(v) * shrink;
    m[j][i] = m[i][j];
  }
  std::vector<std::size_t> placed;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    std::vector<std::size_t> known;
    std::vector<std::size_t> missing;
    for (std::size_t w : placed) (p.pattern().adjacent(v, w) ? known : missing).push_back(w);
    if (!missing.empty()) {
      std::vector<RationalVector> block(known.size(), RationalVector(known.size()));
      RationalVector rhs(known.size());
      for (std::size_t a = 0; a < known.size(); ++a) {
        for (std::size_t b = 0; b < known.size(); ++b) block[a][b] = m[known[a]][known[b]];
        rhs[a] = m[known[a]][v];
      }
      const auto z = solve_exact(block, rhs);
      if (!z) return std::nullopt;
      for (std::size_t w : missing) {
        Rational fill = 0;
        for (std::size_t a = 0; a < known.size(); ++a) fill += m[w][known[a]] * (*z)[a];
        m[v][w] = fill;
        m[w][v] = fill;
      }
    }
    placed.push_back(v);
  }
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set(i, i, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.specified(i, j)) {
        out.set(i, j, p.value(i, j));
      } else {
        const Rational value = m[i][j] / shrink;
        out.set(i, j, std::clamp(value.get_d(), -1.0, 1.0));
      }
    }
  }
  return out;
}

}  // namespace

bool is_partial_psd(const PartialSymMatrix& p, double tol) {
  for (const auto& clique : maximal_cliques(p.pattern())) {
    if (!is_psd(clique_block(p, clique), tol)) return false;
  }
  return true;
}

SymMatrix chordal_complete(const PartialSymMatrix& p, double tol) {
  const auto chordality = is_chordal(p.pattern());
  if (!chordality.chordal) raise(ErrorCode::kNotChordal, "completion requires a chordal pattern");
  double margin = 0.0;
  for (const auto& clique : maximal_cliques(p.pattern())) {
    margin = std::min(margin, min_eigenvalue(clique_block(p, clique)));
  }
  if (margin < -tol) raise(ErrorCode::kNotPartialPsd, "some fully specified principal block is not psd");

  const auto& order = chordality.elimination_order;
  // Exactly psd blocks complete exactly. Blocks that are psd only up to
  // rounding are first pulled inside the cone by shrinking the off-diagonal
  // part, which keeps every fill step well posed; the result then misses
  // psd by at most the shrink amount.
  if (auto exact = exact_completion(p, order, Rational(1)); exact && min_eigenvalue(*exact) >= -kExactSlack) {
    return *exact;
  }
  const double eps = -margin + kShrinkMargin;
  Rational shrink(1.0 / (1.0 + eps));
  auto shrunk = exact_completion(p, order, shrink);
  if (!shrunk) raise(ErrorCode::kNotPartialPsd, "completion failed on the shrunk matrix");
  return *shrunk;
}

}  // namespace qbell
