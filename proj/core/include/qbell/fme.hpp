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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qbell/linsys.hpp"

namespace qbell {

// Fourier-Motzkin projection of `system` along `variable`: every lower bound
// is paired with every upper bound and the variable is dropped. Results are
// canonicalized and exact duplicates removed. Throws kVariableNotFound.
LinSystem fm_eliminate(const LinSystem& system, const std::string& variable);

bool is_feasible(const LinSystem& system);

// max{lhs(query) : system} <= rhs(query), by exact simplex. Throws
// kInfeasible if the system is empty and kUnbounded if the query's
// left-hand side is unbounded above on it.
bool implies(const LinSystem& system, const LinIneq& query);

// Every inequality of `b` is implied by `a` and vice versa. Variables are
// matched by name.
bool mutually_implies(const LinSystem& a, const LinSystem& b);

// Drops inequalities implied by the remaining ones. Inequalities are
// scanned in canonical order; the output is the kept subsystem in that
// order. Throws kInfeasible.
LinSystem remove_redundant(const LinSystem& system);

// The systems produced while eliminating variables one after another.
struct EliminationChain {
  std::vector<std::string> eliminated;
  std::vector<LinSystem> stages;  // stages[0] is the input, stages.back() the projection

  const LinSystem& projection() const { return stages.back(); }

  // Back-substitutes the eliminated variables in reverse order, taking the
  // midpoint of each feasible interval (the finite end when one side is
  // open, 0 when both are). `free_values` must assign every variable of the
  // projection. Throws kEmptyInterval when the point is not in the
  // projection.
  std::map<std::string, Rational> lift(const std::map<std::string, Rational>& free_values) const;
};

// With `prune` every intermediate system goes through remove_redundant,
// which keeps the projection identical while capping growth.
EliminationChain eliminate(const LinSystem& system, const std::vector<std::string>& variables,
                           bool prune = true);

std::map<std::string, Rational> lift_witness(const LinSystem& system, const std::vector<std::string>& eliminated,
                                             const std::map<std::string, Rational>& point);

// Named systems, all in pi units:
//   "cor33_angles"  12 variables c11..c33, alpha, beta, gamma; the linear
//                   angle system of the three 4x4 blocks plus [0, 1] bounds.
//   "lemma2"        9 variables; TLM family for all x, x', y, y' and the four
//                   triple families for all y, y', ybar.
//   "tlm_full"      9 variables; TLM family for all x, x', y, y'.
//   "cor2m"         2m variables c1j, c2j; boxes and the cyclic inequalities.
// Throws kUnknownName.
LinSystem build_named_system(std::string_view name, std::size_t m = 2);

}  // namespace qbell
