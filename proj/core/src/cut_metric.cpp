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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "qbell/errors.hpp"
#include "qbell/polytope.hpp"

namespace qbell {

VPolytope cut_polytope_vertices(const CutSpec& spec) {
  const Graph& g = spec.graph;
  const auto& edges = g.edges();
  if (edges.size() > kMaxCutEdges) raise(ErrorCode::kTooLarge, "cut enumeration is limited to 20 edges");
  const std::size_t free_vertices = g.vertex_count() - 1;
  if (free_vertices >= 31) raise(ErrorCode::kTooLarge, "too many vertices for cut enumeration");
  VPolytope out(edges.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_vertices); ++mask) {
    // Bit i of mask puts vertex i + 1 on the shore; vertex 0 never is.
    const auto on_shore = [mask](std::size_t v) { return v != 0 && ((mask >> (v - 1)) & 1U); };
    RationalVector point;
    for (const auto& [u, v] : edges) {
      const int cut = on_shore(u) != on_shore(v) ? 1 : 0;
      point.emplace_back(spec.variant == CutVariant::kZeroOne ? cut : 1 - 2 * cut);
    }
    out.vertices.push_back(std::move(point));
  }
  out.canonicalize();
  return out;
}

std::vector<std::vector<std::size_t>> chordless_cycles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  // path[0] is the start s; every vertex on the path exceeds s and is
  // adjacent only to its path neighbours, so the closing edge is the only
  // possible chord candidate left.
  std::function<void()> extend = [&] {
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    for (std::size_t w = s + 1; w < n; ++w) {
      if (on_path[w] || !g.adjacent(last, w)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(path[i], w);
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(s, w)) {
        if (path[1] < w) {
          cycles.push_back(path);
          cycles.back().push_back(w);
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = true;
      extend();
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.assign(n, false);
    on_path[s] = true;
    extend();
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

HPolytope metric_polytope_h(const Graph& g) {
  if (g.vertex_count() > kMaxMetricVertices) {
    raise(ErrorCode::kTooLarge, "cycle enumeration is limited to 10 vertices");
  }
  const std::size_t dim = g.edges().size();
  HPolytope out(dim);
  for (std::size_t e = 0; e < dim; ++e) {
    RationalVector a(dim, Rational(0));
    a[e] = -1;
    out.add({a, 0});
    a[e] = 1;
    out.add({a, 1});
  }
  for (const auto& cycle : chordless_cycles(g)) {
    const std::size_t len = cycle.size();
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < len; ++i) ids.push_back(g.edge_index(cycle[i], cycle[(i + 1) % len]));
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << len); ++f) {
      const int size = std::popcount(f);
      if (size % 2 == 0) continue;
      RationalVector a(dim, Rational(0));
      for (std::size_t i = 0; i < len; ++i) a[ids[i]] = ((f >> i) & 1U) ? 1 : -1;
      out.add({a, size - 1});
    }
  }
  out.sort();
  return out;
}

}  // namespace qbell
