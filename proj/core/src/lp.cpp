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

#include "qbell/lp.hpp"

#include <optional>
#include <utility>

#include "qbell/errors.hpp"

namespace qbell::lp {

namespace {

struct SparseColumn {
  std::vector<std::pair<std::size_t, Rational>> entries;
};

class RevisedSimplex {
 public:
  RevisedSimplex(const std::vector<RationalVector>& columns, RationalVector b)
      : rows_(b.size()), real_(columns.size()), b_(std::move(b)) {
    std::vector<bool> flip(rows_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sgn(b_[i]) < 0) {
        flip[i] = true;
        b_[i] = -b_[i];
      }
    }
    flip_ = flip;
    columns_.reserve(real_ + rows_);
    for (const auto& col : columns) {
      if (col.size() != rows_) raise(ErrorCode::kInvalidArgument, "LP column has wrong length");
      SparseColumn sparse;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(col[i]) != 0) sparse.entries.emplace_back(i, flip[i] ? Rational(-col[i]) : col[i]);
      }
      columns_.push_back(std::move(sparse));
    }
    for (std::size_t i = 0; i < rows_; ++i) columns_.push_back({{{i, Rational(1)}}});
    basis_.resize(rows_);
    position_.assign(real_ + rows_, kNonbasic);
    binv_.assign(rows_, RationalVector(rows_));
    for (std::size_t i = 0; i < rows_; ++i) {
      basis_[i] = real_ + i;
      position_[real_ + i] = i;
      binv_[i][i] = 1;
    }
    xb_ = b_;
  }

  // Returns false when the problem is infeasible.
  bool phase_one() {
    RationalVector cost(real_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) cost[real_ + i] = 1;
    run(cost, real_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= real_ && sgn(xb_[i]) != 0) return false;
    }
    // Pivot zero-level artificials out where some real column allows it.
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < real_) continue;
      for (std::size_t j = 0; j < real_; ++j) {
        if (position_[j] != kNonbasic) continue;
        const RationalVector u = ftran(j);
        if (sgn(u[i]) != 0) {
          pivot(i, j, u);
          break;
        }
      }
    }
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const RationalVector& c) {
    RationalVector cost(real_ + rows_);
    for (std::size_t j = 0; j < real_; ++j) cost[j] = c[j];
    return run(cost, real_);
  }

  Rational objective(const RationalVector& c) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < real_) v += c[basis_[i]] * xb_[i];
    }
    return v;
  }

  RationalVector primal(std::size_t size) const {
    RationalVector y(size);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < size) y[basis_[i]] = xb_[i];
    }
    return y;
  }

  // Simplex multipliers for the original (unflipped) rows.
  RationalVector multipliers(const RationalVector& c) const {
    RationalVector pi = prices(c_with_artificials(c));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (flip_[i]) pi[i] = -pi[i];
    }
    return pi;
  }

 private:
  static constexpr std::size_t kNonbasic = static_cast<std::size_t>(-1);

  RationalVector c_with_artificials(const RationalVector& c) const {
    RationalVector cost(real_ + rows_);
    for (std::size_t j = 0; j < real_; ++j) cost[j] = c[j];
    return cost;
  }

  RationalVector prices(const RationalVector& cost) const {
    RationalVector pi(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t k = 0; k < rows_; ++k) {
        if (sgn(binv_[i][k]) != 0) pi[k] += cb * binv_[i][k];
      }
    }
    return pi;
  }

  RationalVector ftran(std::size_t j) const {
    RationalVector u(rows_);
    for (const auto& [row, value] : columns_[j].entries) {
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(binv_[i][row]) != 0) u[i] += binv_[i][row] * value;
      }
    }
    return u;
  }

  void pivot(std::size_t r, std::size_t j, const RationalVector& u) {
    const Rational pivot_value = u[r];
    for (auto& v : binv_[r]) {
      if (sgn(v) != 0) v /= pivot_value;
    }
    xb_[r] /= pivot_value;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(u[i]) == 0) continue;
      const Rational f = u[i];
      for (std::size_t k = 0; k < rows_; ++k) {
        if (sgn(binv_[r][k]) != 0) binv_[i][k] -= f * binv_[r][k];
      }
      xb_[i] -= f * xb_[r];
    }
    position_[basis_[r]] = kNonbasic;
    basis_[r] = j;
    position_[j] = r;
  }

  // Columns with index >= enter_limit never enter.
  bool run(const RationalVector& cost, std::size_t enter_limit) {
    while (true) {
      const RationalVector pi = prices(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < enter_limit; ++j) {
        if (position_[j] != kNonbasic) continue;
        Rational reduced = cost[j];
        for (const auto& [row, value] : columns_[j].entries) {
          if (sgn(pi[row]) != 0) reduced -= pi[row] * value;
        }
        if (sgn(reduced) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const RationalVector u = ftran(*entering);
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(u[i]) <= 0) continue;
        Rational ratio = xb_[i] / u[i];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering, u);
    }
  }

  std::size_t rows_;
  std::size_t real_;
  RationalVector b_;
  std::vector<bool> flip_;
  std::vector<SparseColumn> columns_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> position_;
  std::vector<RationalVector> binv_;
  RationalVector xb_;
};

}  // namespace

Solution solve_standard_form(const std::vector<RationalVector>& columns, const RationalVector& b,
                             const RationalVector& c) {
  if (c.size() != columns.size()) raise(ErrorCode::kInvalidArgument, "cost vector has wrong length");
  RevisedSimplex simplex(columns, b);
  Solution out;
  if (!simplex.phase_one()) {
    out.status = Status::kInfeasible;
    return out;
  }
  if (!simplex.phase_two(c)) {
    out.status = Status::kUnbounded;
    return out;
  }
  out.status = Status::kOptimal;
  out.value = simplex.objective(c);
  out.point = simplex.primal(columns.size());
  return out;
}

Solution maximize(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                  const RationalVector& objective) {
  // Dual: min rhs.y s.t. sum_i y_i rows[i] = objective, y >= 0.
  if (rows.size() != rhs.size()) raise(ErrorCode::kInvalidArgument, "rows and rhs differ in length");
  RevisedSimplex simplex(rows, objective);
  Solution out;
  if (!simplex.phase_one()) {
    out.status = Status::kUnbounded;
    return out;
  }
  if (!simplex.phase_two(rhs)) {
    out.status = Status::kInfeasible;
    return out;
  }
  out.status = Status::kOptimal;
  out.value = simplex.objective(rhs);
  out.point = simplex.multipliers(rhs);
  return out;
}

bool feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs) {
  if (rows.empty()) return true;
  const std::size_t dim = rows.front().size();
  // Infeasible iff some y >= 0 with sum y = 1, y^T rows = 0 has rhs.y < 0.
  std::vector<RationalVector> columns;
  columns.reserve(rows.size());
  for (const auto& row : rows) {
    RationalVector col(row);
    col.emplace_back(1);
    columns.push_back(std::move(col));
  }
  RationalVector b(dim + 1);
  b[dim] = 1;
  const Solution s = solve_standard_form(columns, b, rhs);
  return s.status != Status::kOptimal || sgn(s.value) >= 0;
}

}  // namespace qbell::lp
