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

#include "qbell/fme.hpp"

#include <algorithm>

#include "qbell/errors.hpp"
#include "qbell/lp.hpp"

namespace qbell {

namespace {

void split_rows(const LinSystem& system, std::vector<RationalVector>& rows, RationalVector& rhs,
                std::size_t skip = static_cast<std::size_t>(-1)) {
  rows.clear();
  rhs.clear();
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i == skip) continue;
    rows.push_back(system.inequalities()[i].coeffs);
    rhs.push_back(system.inequalities()[i].rhs);
  }
}

// Expresses `query` over the variables of `target`; false if it mentions a
// variable `target` lacks.
bool remap(const LinIneq& query, const LinSystem& from, const LinSystem& target, LinIneq& out) {
  out.coeffs.assign(target.dimension(), Rational(0));
  out.rhs = query.rhs;
  for (std::size_t i = 0; i < from.dimension(); ++i) {
    if (sgn(query.coeffs[i]) == 0) continue;
    if (!target.has_variable(from.variables()[i])) return false;
    out.coeffs[target.index_of(from.variables()[i])] = query.coeffs[i];
  }
  return true;
}

}  // namespace

LinSystem fm_eliminate(const LinSystem& system, const std::string& variable) {
  const std::size_t v = system.index_of(variable);
  std::vector<std::string> vars = system.variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(v));
  LinSystem out(vars);

  const auto drop = [v](const RationalVector& coeffs) {
    RationalVector r = coeffs;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(v));
    return r;
  };
  std::vector<const LinIneq*> upper;
  std::vector<const LinIneq*> lower;
  for (const auto& q : system.inequalities()) {
    const int s = sgn(q.coeffs[v]);
    if (s > 0) {
      upper.push_back(&q);
    } else if (s < 0) {
      lower.push_back(&q);
    } else {
      out.add({drop(q.coeffs), q.rhs});
    }
  }
  for (const LinIneq* lo : lower) {
    for (const LinIneq* up : upper) {
      const Rational wl = -lo->coeffs[v];
      const Rational& wu = up->coeffs[v];
      LinIneq combined{RationalVector(system.dimension()), wu * lo->rhs + wl * up->rhs};
      for (std::size_t i = 0; i < system.dimension(); ++i) {
        combined.coeffs[i] = wu * lo->coeffs[i] + wl * up->coeffs[i];
      }
      out.add({drop(combined.coeffs), combined.rhs});
    }
  }
  return out;
}

bool is_feasible(const LinSystem& system) {
  std::vector<RationalVector> rows;
  RationalVector rhs;
  split_rows(system, rows, rhs);
  return lp::feasible(rows, rhs);
}

bool implies(const LinSystem& system, const LinIneq& query) {
  if (!is_feasible(system)) raise(ErrorCode::kInfeasible, "system has no solutions");
  std::vector<RationalVector> rows;
  RationalVector rhs;
  split_rows(system, rows, rhs);
  const auto sol = lp::maximize(rows, rhs, query.coeffs);
  if (sol.status == lp::Status::kUnbounded) raise(ErrorCode::kUnbounded, "query is unbounded on the system");
  if (sol.status == lp::Status::kInfeasible) raise(ErrorCode::kInfeasible, "system has no solutions");
  return sol.value <= query.rhs;
}

bool mutually_implies(const LinSystem& a, const LinSystem& b) {
  const auto one_way = [](const LinSystem& from, const LinSystem& to) {
    for (const auto& q : to.inequalities()) {
      LinIneq mapped;
      if (!remap(q, to, from, mapped)) return false;
      try {
        if (!implies(from, mapped)) return false;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kUnbounded) return false;
        throw;
      }
    }
    return true;
  };
  return one_way(a, b) && one_way(b, a);
}

LinSystem remove_redundant(const LinSystem& system) {
  if (!is_feasible(system)) raise(ErrorCode::kInfeasible, "system has no solutions");
  std::vector<LinIneq> ordered = system.inequalities();
  std::sort(ordered.begin(), ordered.end(), canonical_less);

  std::vector<bool> kept(ordered.size(), true);
  std::vector<RationalVector> rows;
  RationalVector rhs;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    rows.clear();
    rhs.clear();
    for (std::size_t j = 0; j < ordered.size(); ++j) {
      if (j == i || !kept[j]) continue;
      rows.push_back(ordered[j].coeffs);
      rhs.push_back(ordered[j].rhs);
    }
    const auto sol = lp::maximize(rows, rhs, ordered[i].coeffs);
    if (sol.status == lp::Status::kOptimal && sol.value <= ordered[i].rhs) kept[i] = false;
  }
  LinSystem out(system.variables());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (kept[i]) out.add(ordered[i]);
  }
  return out;
}

EliminationChain eliminate(const LinSystem& system, const std::vector<std::string>& variables, bool prune) {
  EliminationChain chain;
  chain.stages.push_back(system);
  for (const auto& v : variables) {
    LinSystem next = fm_eliminate(chain.stages.back(), v);
    if (prune) next = remove_redundant(next);
    chain.eliminated.push_back(v);
    chain.stages.push_back(std::move(next));
  }
  return chain;
}

std::map<std::string, Rational> EliminationChain::lift(const std::map<std::string, Rational>& free_values) const {
  std::map<std::string, Rational> values;
  for (const auto& name : projection().variables()) {
    auto it = free_values.find(name);
    if (it == free_values.end()) raise(ErrorCode::kInvalidArgument, "missing value for '" + name + "'");
    values[name] = it->second;
  }
  const auto check_stage = [&values](const LinSystem& stage, const std::string* unknown, Rational* lower,
                                     Rational* upper, bool& has_lower, bool& has_upper) {
    for (const auto& q : stage.inequalities()) {
      Rational rest = q.rhs;
      Rational own = 0;
      for (std::size_t i = 0; i < stage.dimension(); ++i) {
        if (sgn(q.coeffs[i]) == 0) continue;
        const auto& name = stage.variables()[i];
        if (unknown && name == *unknown) {
          own = q.coeffs[i];
        } else {
          rest -= q.coeffs[i] * values.at(name);
        }
      }
      if (sgn(own) == 0) {
        if (sgn(rest) < 0) raise(ErrorCode::kEmptyInterval, "point violates the projected system");
        continue;
      }
      const Rational bound = rest / own;
      if (sgn(own) > 0) {
        if (!has_upper || bound < *upper) *upper = bound;
        has_upper = true;
      } else {
        if (!has_lower || bound > *lower) *lower = bound;
        has_lower = true;
      }
    }
  };

  bool dummy_lower = false;
  bool dummy_upper = false;
  check_stage(projection(), nullptr, nullptr, nullptr, dummy_lower, dummy_upper);

  std::map<std::string, Rational> lifted;
  for (std::size_t k = eliminated.size(); k-- > 0;) {
    const std::string& v = eliminated[k];
    Rational lower;
    Rational upper;
    bool has_lower = false;
    bool has_upper = false;
    check_stage(stages[k], &v, &lower, &upper, has_lower, has_upper);
    if (has_lower && has_upper && lower > upper) {
      raise(ErrorCode::kEmptyInterval, "no feasible value for '" + v + "'");
    }
    Rational value = 0;
    if (has_lower && has_upper) {
      value = (lower + upper) / 2;
    } else if (has_lower) {
      value = lower;
    } else if (has_upper) {
      value = upper;
    }
    values[v] = value;
    lifted[v] = value;
  }
  return lifted;
}

std::map<std::string, Rational> lift_witness(const LinSystem& system, const std::vector<std::string>& eliminated,
                                             const std::map<std::string, Rational>& point) {
  return eliminate(system, eliminated, false).lift(point);
}

}  // namespace qbell
