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

#include "qbell/linsys.hpp"

#include <algorithm>

#include "qbell/errors.hpp"

namespace qbell {

namespace {

std::pair<IntegerVector, Integer> key_of(const LinIneq& canonical) {
  IntegerVector coeffs;
  coeffs.reserve(canonical.coeffs.size());
  for (const auto& c : canonical.coeffs) coeffs.push_back(c.get_num());
  return {std::move(coeffs), canonical.rhs.get_num()};
}

}  // namespace

bool LinIneq::is_trivial() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::size_t LinIneq::support() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

LinIneq canonicalize(const LinIneq& ineq) {
  RationalVector all = ineq.coeffs;
  all.push_back(ineq.rhs);
  const IntegerVector ints = primitive_integer_vector(all);
  LinIneq out;
  out.coeffs.reserve(ineq.coeffs.size());
  for (std::size_t i = 0; i + 1 < ints.size(); ++i) out.coeffs.emplace_back(ints[i]);
  out.rhs = Rational(ints.back());
  if (out.is_trivial()) out.rhs = sgn(out.rhs) < 0 ? -1 : (sgn(out.rhs) > 0 ? 1 : 0);
  return out;
}

bool canonical_less(const LinIneq& a, const LinIneq& b) {
  const std::size_t sa = a.support();
  const std::size_t sb = b.support();
  if (sa != sb) return sa < sb;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const int c = cmp(a.coeffs[i], b.coeffs[i]);
    if (c != 0) return c > 0;
  }
  return a.rhs < b.rhs;
}

LinSystem::LinSystem(std::vector<std::string> variables) : variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v).second) raise(ErrorCode::kInvalidArgument, "duplicate variable '" + v + "'");
  }
}

std::size_t LinSystem::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) raise(ErrorCode::kVariableNotFound, "no variable named '" + name + "'");
  return static_cast<std::size_t>(it - variables_.begin());
}

bool LinSystem::has_variable(const std::string& name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

bool LinSystem::add(const LinIneq& ineq) {
  if (ineq.coeffs.size() != variables_.size()) {
    raise(ErrorCode::kInvalidArgument, "inequality arity does not match the system");
  }
  LinIneq canonical = canonicalize(ineq);
  if (canonical.is_trivial() && sgn(canonical.rhs) >= 0) return false;
  if (!index_.insert(key_of(canonical)).second) return false;
  ineqs_.push_back(std::move(canonical));
  return true;
}

bool LinSystem::add(const std::map<std::string, Rational>& coeffs, const Rational& rhs) {
  LinIneq ineq{RationalVector(variables_.size()), rhs};
  for (const auto& [name, value] : coeffs) ineq.coeffs[index_of(name)] += value;
  return add(ineq);
}

Affine LinSystem::affine(const std::map<std::string, Rational>& coeffs, const Rational& constant) const {
  Affine a{RationalVector(variables_.size()), constant};
  for (const auto& [name, value] : coeffs) a.coeffs[index_of(name)] += value;
  return a;
}

void LinSystem::add_abs_sum(const std::vector<Affine>& terms, const Affine& linear, const Rational& rhs) {
  const std::size_t k = terms.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    LinIneq ineq{linear.coeffs, rhs - linear.constant};
    for (std::size_t t = 0; t < k; ++t) {
      const int s = (mask & (1u << t)) ? -1 : 1;
      for (std::size_t i = 0; i < ineq.coeffs.size(); ++i) ineq.coeffs[i] += s * terms[t].coeffs[i];
      ineq.rhs -= s * terms[t].constant;
    }
    add(ineq);
  }
}

bool LinSystem::contains(const LinIneq& ineq) const {
  const LinIneq canonical = canonicalize(ineq);
  if (canonical.is_trivial() && sgn(canonical.rhs) >= 0) return true;
  return index_.count(key_of(canonical)) > 0;
}

void LinSystem::sort() { std::sort(ineqs_.begin(), ineqs_.end(), canonical_less); }

bool LinSystem::satisfied_by(const RationalVector& point) const {
  if (point.size() != variables_.size()) raise(ErrorCode::kInvalidArgument, "point has wrong dimension");
  return std::all_of(ineqs_.begin(), ineqs_.end(),
                     [&](const LinIneq& q) { return dot(q.coeffs, point) <= q.rhs; });
}

}  // namespace qbell
