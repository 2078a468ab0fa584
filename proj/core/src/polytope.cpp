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

#include "qbell/polytope.hpp"

#include <algorithm>

#include "double_description.hpp"
#include "qbell/errors.hpp"

namespace qbell {

namespace {

RationalVector to_rationals(const IntegerVector& v, std::size_t begin, std::size_t end) {
  RationalVector r;
  for (std::size_t i = begin; i < end; ++i) r.emplace_back(v[i]);
  return r;
}

// Row (b, -a) of the homogenized constraint b t - a.x >= 0.
IntegerVector homogenized(const Halfspace& h) {
  RationalVector row{h.b};
  for (const auto& c : h.a) row.push_back(-c);
  return primitive_integer_vector(row);
}

// Reduced row echelon form with unit pivots; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

Halfspace canonical_halfspace(const Halfspace& h) {
  RationalVector all = h.a;
  all.push_back(h.b);
  const IntegerVector v = primitive_integer_vector(all);
  Halfspace out{to_rationals(v, 0, h.a.size()), Rational(v.back())};
  if (std::all_of(out.a.begin(), out.a.end(), [](const Rational& x) { return sgn(x) == 0; })) {
    out.b = sgn(out.b);
  }
  return out;
}

Halfspace canonical_equation(const Halfspace& h) {
  Halfspace out = canonical_halfspace(h);
  auto first = std::find_if(out.a.begin(), out.a.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (first != out.a.end() && sgn(*first) < 0) {
    for (auto& x : out.a) x = -x;
    out.b = -out.b;
  }
  return out;
}

bool halfspace_less(const Halfspace& x, const Halfspace& y) {
  return canonical_less(LinIneq{x.a, x.b}, LinIneq{y.a, y.b});
}

void HPolytope::add(const Halfspace& h) {
  if (h.a.size() != dim) raise(ErrorCode::kInvalidArgument, "halfspace has wrong dimension");
  Halfspace c = canonical_halfspace(h);
  const bool trivial = std::all_of(c.a.begin(), c.a.end(), [](const Rational& x) { return sgn(x) == 0; });
  if (trivial && sgn(c.b) >= 0) return;
  if (std::find(ineqs.begin(), ineqs.end(), c) == ineqs.end()) ineqs.push_back(std::move(c));
}

void HPolytope::add_equation(const Halfspace& h) {
  if (h.a.size() != dim) raise(ErrorCode::kInvalidArgument, "equation has wrong dimension");
  Halfspace c = canonical_equation(h);
  if (std::find(equations.begin(), equations.end(), c) == equations.end()) equations.push_back(std::move(c));
}

void HPolytope::sort() {
  std::sort(ineqs.begin(), ineqs.end(), halfspace_less);
  std::sort(equations.begin(), equations.end(), halfspace_less);
}

bool HPolytope::contains(const RationalVector& x) const {
  if (x.size() != dim) raise(ErrorCode::kInvalidArgument, "point has wrong dimension");
  for (const auto& h : ineqs) {
    if (dot(h.a, x) > h.b) return false;
  }
  for (const auto& h : equations) {
    if (dot(h.a, x) != h.b) return false;
  }
  return true;
}

void VPolytope::canonicalize() {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

HPolytope to_hpolytope(const LinSystem& system) {
  HPolytope p(system.dimension());
  for (const auto& q : system.inequalities()) p.add({q.coeffs, q.rhs});
  return p;
}

LinSystem to_linsystem(const HPolytope& p, const std::vector<std::string>& variables) {
  if (variables.size() != p.dim) raise(ErrorCode::kInvalidArgument, "variable count does not match dimension");
  LinSystem s(variables);
  for (const auto& h : p.ineqs) s.add({h.a, h.b});
  for (const auto& h : p.equations) {
    s.add({h.a, h.b});
    RationalVector neg = h.a;
    for (auto& x : neg) x = -x;
    s.add({neg, -h.b});
  }
  return s;
}

VPolytope h_to_v(const HPolytope& p) {
  std::vector<IntegerVector> rows;
  IntegerVector t(p.dim + 1, Integer(0));
  t[0] = 1;
  rows.push_back(t);
  for (const auto& e : p.equations) {
    rows.push_back(homogenized(e));
    IntegerVector neg = rows.back();
    for (auto& x : neg) x = -x;
    rows.push_back(std::move(neg));
  }
  std::vector<Halfspace> sorted = p.ineqs;
  std::sort(sorted.begin(), sorted.end(), halfspace_less);
  for (const auto& h : sorted) rows.push_back(homogenized(h));

  const auto cone = detail::double_description(p.dim + 1, rows);
  VPolytope out(p.dim);
  bool recession = !cone.lineality.empty();
  for (const auto& r : cone.rays) {
    if (sgn(r[0]) == 0) {
      recession = true;
      continue;
    }
    RationalVector v;
    for (std::size_t i = 1; i <= p.dim; ++i) {
      Rational x(r[i], r[0]);
      x.canonicalize();
      v.push_back(std::move(x));
    }
    out.vertices.push_back(std::move(v));
  }
  if (out.vertices.empty()) raise(ErrorCode::kEmpty, "polytope is empty");
  if (recession) raise(ErrorCode::kUnbounded, "polyhedron is unbounded");
  out.canonicalize();
  return out;
}

HPolytope v_to_h(const VPolytope& p) {
  if (p.vertices.empty()) raise(ErrorCode::kInvalidArgument, "convex hull of no points");
  VPolytope sorted = p;
  sorted.canonicalize();
  // Cone of (a, b) with a.v <= b for every vertex v.
  std::vector<IntegerVector> rows;
  for (const auto& v : sorted.vertices) {
    if (v.size() != p.dim) raise(ErrorCode::kInvalidArgument, "vertex has wrong dimension");
    RationalVector row;
    for (const auto& x : v) row.push_back(-x);
    row.emplace_back(1);
    rows.push_back(primitive_integer_vector(row));
  }
  const auto cone = detail::double_description(p.dim + 1, rows);

  std::vector<RationalVector> hull;
  for (const auto& l : cone.lineality) hull.push_back(to_rationals(l, 0, l.size()));
  const auto pivots = rref(hull);

  HPolytope out(p.dim);
  for (const auto& row : hull) out.add_equation({RationalVector(row.begin(), row.end() - 1), row.back()});
  for (const auto& r : cone.rays) {
    RationalVector w = to_rationals(r, 0, r.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Rational f = w[pivots[k]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * hull[k][j];
    }
    Halfspace h{RationalVector(w.begin(), w.end() - 1), w.back()};
    if (std::all_of(h.a.begin(), h.a.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
    out.add(h);
  }
  out.sort();
  return out;
}

bool polytopes_equal(const HPolytope& a, const HPolytope& b) {
  if (a.dim != b.dim) return false;
  return h_to_v(a) == h_to_v(b);
}

bool polytopes_equal(const VPolytope& a, const VPolytope& b) {
  if (a.dim != b.dim) return false;
  VPolytope x = a;
  VPolytope y = b;
  x.canonicalize();
  y.canonicalize();
  return x == y;
}

bool polytopes_equal(const HPolytope& a, const VPolytope& b) {
  if (a.dim != b.dim) return false;
  VPolytope y = b;
  y.canonicalize();
  return h_to_v(a) == y;
}

FacetDiff compare_facets(const HPolytope& left, const HPolytope& right) {
  FacetDiff diff;
  const auto collect = [](const HPolytope& p) {
    std::vector<Halfspace> rows;
    for (const auto& h : p.ineqs) rows.push_back(canonical_halfspace(h));
    std::sort(rows.begin(), rows.end(), halfspace_less);
    return rows;
  };
  const auto collect_eq = [](const HPolytope& p) {
    std::vector<Halfspace> rows;
    for (const auto& h : p.equations) rows.push_back(canonical_equation(h));
    std::sort(rows.begin(), rows.end(), halfspace_less);
    return rows;
  };
  const auto difference = [](const std::vector<Halfspace>& x, const std::vector<Halfspace>& y,
                             std::vector<Halfspace>& out) {
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out), halfspace_less);
  };
  const auto l = collect(left), r = collect(right);
  difference(l, r, diff.only_left);
  difference(r, l, diff.only_right);
  const auto le = collect_eq(left), re = collect_eq(right);
  difference(le, re, diff.only_left);
  difference(re, le, diff.only_right);
  return diff;
}

}  // namespace qbell
