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
#include <set>
#include <string>
#include <vector>

#include "qbell/rational.hpp"

namespace qbell {

// sum_i coeffs[i] * var_i <= rhs, with every constant in units of pi.
// Canonical form: integer coefficients and rhs with joint gcd 1 (scaling is
// by a positive factor only, so the direction of the inequality is kept).
struct LinIneq {
  RationalVector coeffs;
  Rational rhs;

  bool is_trivial() const;  // no variable appears
  std::size_t support() const;

  friend bool operator==(const LinIneq&, const LinIneq&) = default;
};

LinIneq canonicalize(const LinIneq& ineq);
// Orders by support size, then coefficients, then rhs.
bool canonical_less(const LinIneq& a, const LinIneq& b);

// An affine expression sum coeffs . v + constant over a system's variables.
struct Affine {
  RationalVector coeffs;
  Rational constant;
};

class LinSystem {
 public:
  LinSystem() = default;
  explicit LinSystem(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<LinIneq>& inequalities() const noexcept { return ineqs_; }
  std::size_t size() const noexcept { return ineqs_.size(); }
  std::size_t dimension() const noexcept { return variables_.size(); }

  // Throws kVariableNotFound.
  std::size_t index_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  // Canonicalizes and appends unless an identical inequality is present.
  // A trivially true inequality (0 <= nonnegative) is dropped. Returns true
  // when the system grew.
  bool add(const LinIneq& ineq);
  bool add(const std::map<std::string, Rational>& coeffs, const Rational& rhs);

  // sum_k |terms_k| + linear <= rhs, expanded into 2^k plain inequalities.
  void add_abs_sum(const std::vector<Affine>& terms, const Affine& linear, const Rational& rhs);

  Affine affine(const std::map<std::string, Rational>& coeffs, const Rational& constant = 0) const;

  bool contains(const LinIneq& ineq) const;
  // Sorts inequalities into canonical order.
  void sort();

  // Exact check of a full assignment (one rational per variable).
  bool satisfied_by(const RationalVector& point) const;

 private:
  std::vector<std::string> variables_;
  std::vector<LinIneq> ineqs_;
  std::set<std::pair<IntegerVector, Integer>> index_;
};

}  // namespace qbell
