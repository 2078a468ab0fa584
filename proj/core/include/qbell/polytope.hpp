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
#include <string>
#include <vector>

#include "qbell/chordal.hpp"
#include "qbell/linsys.hpp"
#include "qbell/rational.hpp"

namespace qbell {

// a . x <= b (or = b for equations). Stored in primitive integer form.
struct Halfspace {
  RationalVector a;
  Rational b;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

Halfspace canonical_halfspace(const Halfspace& h);
// Equations may be negated freely: first nonzero coefficient made positive.
Halfspace canonical_equation(const Halfspace& h);
bool halfspace_less(const Halfspace& x, const Halfspace& y);

struct HPolytope {
  std::size_t dim = 0;
  std::vector<Halfspace> ineqs;
  std::vector<Halfspace> equations;

  HPolytope() = default;
  explicit HPolytope(std::size_t d) : dim(d) {}

  // Canonicalizes; exact duplicates and trivially true rows are dropped.
  void add(const Halfspace& h);
  void add_equation(const Halfspace& h);
  // Sorts both lists canonically.
  void sort();

  bool contains(const RationalVector& x) const;
};

struct VPolytope {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;

  VPolytope() = default;
  explicit VPolytope(std::size_t d) : dim(d) {}

  // Sorts lexicographically and removes duplicates.
  void canonicalize();

  friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

HPolytope to_hpolytope(const LinSystem& system);
LinSystem to_linsystem(const HPolytope& p, const std::vector<std::string>& variables);

// Vertex enumeration by double description. Throws kEmpty when there is no
// point and kUnbounded when a recession direction survives.
VPolytope h_to_v(const HPolytope& p);

// Facets of the convex hull. For a hull of lower dimension the facets are
// relative to the affine hull, whose equations are listed separately in
// reduced form. Throws kInvalidArgument on an empty vertex list.
HPolytope v_to_h(const VPolytope& p);

// Vertex-list comparison.
bool polytopes_equal(const HPolytope& a, const HPolytope& b);
bool polytopes_equal(const VPolytope& a, const VPolytope& b);
bool polytopes_equal(const HPolytope& a, const VPolytope& b);

struct FacetDiff {
  std::vector<Halfspace> only_left;
  std::vector<Halfspace> only_right;

  bool empty() const { return only_left.empty() && only_right.empty(); }
};

// Compares canonical facet lists and equation lists as sets.
FacetDiff compare_facets(const HPolytope& left, const HPolytope& right);

enum class CutVariant { kZeroOne, kPlusMinusOne };

struct CutSpec {
  Graph graph;
  CutVariant variant = CutVariant::kZeroOne;
};

inline constexpr std::size_t kMaxCutEdges = 20;
inline constexpr std::size_t kMaxMetricVertices = 10;

// One coordinate per edge in graph edge order. Cut shores range over subsets
// of the non-root vertices (vertex 0 is the root). Throws kTooLarge.
VPolytope cut_polytope_vertices(const CutSpec& spec);

// Chordless cycles of length >= 3, each listed once starting at its smallest
// vertex with the smaller neighbour second.
std::vector<std::vector<std::size_t>> chordless_cycles(const Graph& g);

// Cycle inequalities x(F) - x(C \ F) <= |F| - 1 over chordless cycles C and
// odd F subset of C, plus 0 <= x_e <= 1. Throws kTooLarge.
HPolytope metric_polytope_h(const Graph& g);

}  // namespace qbell
