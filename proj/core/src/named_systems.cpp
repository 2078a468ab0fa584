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

#include <string>

#include "qbell/errors.hpp"
#include "qbell/fme.hpp"

namespace qbell {

namespace {

std::string cell(std::size_t x, std::size_t y) { return "c" + std::to_string(x + 1) + std::to_string(y + 1); }

std::vector<std::string> cell_names(std::size_t n, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) names.push_back(cell(x, y));
  }
  return names;
}

void add_boxes(LinSystem& s) {
  for (const auto& v : s.variables()) {
    s.add({{v, Rational(-1)}}, 0);
    s.add({{v, Rational(1)}}, 1);
  }
}

// |p - q|
Affine diff(const LinSystem& s, const std::string& p, const std::string& q) {
  if (p == q) return s.affine({});
  return s.affine({{p, Rational(1)}, {q, Rational(-1)}});
}

// |p + q - 1|, i.e. |p + q - pi| in pi units
Affine sum(const LinSystem& s, const std::string& p, const std::string& q) {
  if (p == q) return s.affine({{p, Rational(2)}}, -1);
  return s.affine({{p, Rational(1)}, {q, Rational(1)}}, -1);
}

// Triangle-type system of an angle triple: each angle at most the sum of the
// other two and the perimeter at most 2 pi.
void add_triangle(LinSystem& s, const std::string& a, const std::string& b, const std::string& c) {
  s.add({{a, Rational(1)}, {b, Rational(-1)}, {c, Rational(-1)}}, 0);
  s.add({{b, Rational(1)}, {a, Rational(-1)}, {c, Rational(-1)}}, 0);
  s.add({{c, Rational(1)}, {a, Rational(-1)}, {b, Rational(-1)}}, 0);
  s.add({{a, Rational(1)}, {b, Rational(1)}, {c, Rational(1)}}, 2);
}

void add_tlm_family(LinSystem& s) {
  const Affine zero = s.affine({});
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t x2 = 0; x2 < 3; ++x2) {
      for (std::size_t y = 0; y < 3; ++y) {
        for (std::size_t y2 = 0; y2 < 3; ++y2) {
          s.add_abs_sum({diff(s, cell(x, y), cell(x2, y)), sum(s, cell(x, y2), cell(x2, y2))}, zero, 1);
        }
      }
    }
  }
}

LinSystem cor33_angles() {
  auto vars = cell_names(3, 3);
  vars.insert(vars.end(), {"alpha", "beta", "gamma"});
  LinSystem s(vars);
  add_boxes(s);
  add_triangle(s, "alpha", "beta", "gamma");
  for (std::size_t y = 0; y < 3; ++y) {
    add_triangle(s, "alpha", cell(0, y), cell(1, y));
    add_triangle(s, "beta", cell(0, y), cell(2, y));
    add_triangle(s, "gamma", cell(1, y), cell(2, y));
  }
  return s;
}

LinSystem lemma2(bool with_triples) {
  LinSystem s(cell_names(3, 3));
  add_boxes(s);
  add_tlm_family(s);
  if (!with_triples) return s;
  const Affine zero = s.affine({});
  for (std::size_t y = 0; y < 3; ++y) {
    for (std::size_t y2 = 0; y2 < 3; ++y2) {
      for (std::size_t yb = 0; yb < 3; ++yb) {
        const Affine d12 = diff(s, cell(0, y), cell(1, y));
        const Affine s12 = sum(s, cell(0, y), cell(1, y));
        const Affine d23 = diff(s, cell(1, y2), cell(2, y2));
        const Affine s23 = sum(s, cell(1, y2), cell(2, y2));
        const Affine d13 = diff(s, cell(0, yb), cell(2, yb));
        const Affine s13 = sum(s, cell(0, yb), cell(2, yb));
        s.add_abs_sum({d12, d23, d13}, zero, 2);
        s.add_abs_sum({d12, s23, s13}, zero, 2);
        s.add_abs_sum({s12, d23, s13}, zero, 2);
        s.add_abs_sum({s12, s23, d13}, zero, 2);
      }
    }
  }
  return s;
}

LinSystem cor2m(std::size_t m) {
  if (m == 0) raise(ErrorCode::kInvalidArgument, "cor2m needs m >= 1");
  LinSystem s(cell_names(2, m));
  add_boxes(s);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::string cells[4] = {cell(0, i), cell(0, j), cell(1, i), cell(1, j)};
      for (const auto& minus : cells) {
        std::map<std::string, Rational> lower;
        std::map<std::string, Rational> upper;
        for (const auto& c : cells) {
          lower[c] = c == minus ? 1 : -1;
          upper[c] = c == minus ? -1 : 1;
        }
        s.add(lower, 0);
        s.add(upper, 2);
      }
    }
  }
  return s;
}

}  // namespace

LinSystem build_named_system(std::string_view name, std::size_t m) {
  LinSystem s;
  if (name == "cor33_angles") {
    s = cor33_angles();
  } else if (name == "lemma2") {
    s = lemma2(true);
  } else if (name == "tlm_full") {
    s = lemma2(false);
  } else if (name == "cor2m") {
    s = cor2m(m);
  } else {
    raise(ErrorCode::kUnknownName, "unknown system '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace qbell
