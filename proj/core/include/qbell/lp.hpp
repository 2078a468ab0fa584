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

#include <vector>

#include "qbell/rational.hpp"

namespace qbell::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Rational value;
  RationalVector point;
};

// minimize c.y subject to A y = b, y >= 0, where A is given column by
// column. Two-phase revised simplex over exact rationals with Bland's
// smallest-index rule, so it terminates on degenerate problems.
Solution solve_standard_form(const std::vector<RationalVector>& columns, const RationalVector& b,
                             const RationalVector& c);

// maximize objective.x subject to rows[i].x <= rhs[i], x free. Solved through
// the dual; `point` is a maximizer when the status is optimal. When the
// primal is infeasible the status is kInfeasible or kUnbounded depending on
// the dual, so callers check feasibility first.
Solution maximize(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                  const RationalVector& objective);

// Farkas test: is {x : rows.x <= rhs} nonempty?
bool feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs);

}  // namespace qbell::lp
