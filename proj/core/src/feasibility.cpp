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
#include <cmath>
#include <optional>

#include "qbell/chordal.hpp"
#include "qbell/corsets.hpp"
#include "qbell/errors.hpp"

namespace qbell {

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

constexpr std::size_t kGridPoints = 21;
constexpr double kBarrierGap = 1e-11;
// 3 blocks of size 4 plus 6 box constraints.
constexpr double kBarrierParameter = 18.0;

Mat4 shifted_block(const Correlation& c, std::size_t y, const std::array<double, 4>& z) {
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = 1.0 - z[3];
  m[0][1] = m[1][0] = z[0];
  m[0][2] = m[2][0] = z[1];
  m[1][2] = m[2][1] = z[2];
  for (std::size_t i = 0; i < 3; ++i) m[i][3] = m[3][i] = c(i, y);
  return m;
}

// Cholesky of a 4x4 symmetric matrix; nullopt unless positive definite.
std::optional<Mat4> cholesky(const Mat4& a) {
  Mat4 l{};
  for (std::size_t j = 0; j < 4; ++j) {
    double d = a[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (!(d > 0.0)) return std::nullopt;
    l[j][j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < 4; ++i) {
      double s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      l[i][j] = s / l[j][j];
    }
  }
  return l;
}

Mat4 inverse_from_cholesky(const Mat4& l) {
  Mat4 inv{};
  for (std::size_t col = 0; col < 4; ++col) {
    std::array<double, 4> y{};
    for (std::size_t i = 0; i < 4; ++i) {
      double s = (i == col) ? 1.0 : 0.0;
      for (std::size_t k = 0; k < i; ++k) s -= l[i][k] * y[k];
      y[i] = s / l[i][i];
    }
    for (std::size_t ii = 4; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t k = ii + 1; k < 4; ++k) s -= l[k][ii] * inv[k][col];
      inv[ii][col] = s / l[ii][ii];
    }
  }
  return inv;
}

// Barrier objective -s t - sum_y log det(X_y - tI) - sum log(1 - x^2);
// nullopt outside the domain.
std::optional<double> barrier_value(const Correlation& c, const std::array<double, 4>& z, double s) {
  double value = -s * z[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(std::abs(z[i]) < 1.0)) return std::nullopt;
    value -= std::log1p(-z[i] * z[i]);
  }
  for (std::size_t y = 0; y < 3; ++y) {
    const auto l = cholesky(shifted_block(c, y, z));
    if (!l) return std::nullopt;
    for (std::size_t i = 0; i < 4; ++i) value -= 2.0 * std::log((*l)[i][i]);
  }
  return value;
}

// Direction matrices dZ/dz_k for z = (alpha, beta, gamma, t).
Mat4 direction(std::size_t k) {
  Mat4 d{};
  switch (k) {
    case 0: d[0][1] = d[1][0] = 1.0; break;
    case 1: d[0][2] = d[2][0] = 1.0; break;
    case 2: d[1][2] = d[2][1] = 1.0; break;
    default:
      for (std::size_t i = 0; i < 4; ++i) d[i][i] = -1.0;
  }
  return d;
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (a[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < 4; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

double trace_product(const Mat4& a, const Mat4& b) {
  double t = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t += a[i][j] * b[j][i];
  }
  return t;
}

// Solves the 4x4 system h x = rhs by Gaussian elimination with pivoting.
std::optional<std::array<double, 4>> solve4(Mat4 h, std::array<double, 4> rhs) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t p = col;
    for (std::size_t i = col + 1; i < 4; ++i) {
      if (std::abs(h[i][col]) > std::abs(h[p][col])) p = i;
    }
    if (std::abs(h[p][col]) < 1e-300) return std::nullopt;
    std::swap(h[p], h[col]);
    std::swap(rhs[p], rhs[col]);
    for (std::size_t i = col + 1; i < 4; ++i) {
      const double f = h[i][col] / h[col][col];
      for (std::size_t j = col; j < 4; ++j) h[i][j] -= f * h[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  std::array<double, 4> x{};
  for (std::size_t i = 4; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t j = i + 1; j < 4; ++j) s -= h[i][j] * x[j];
    x[i] = s / h[i][i];
  }
  return x;
}

// One centering pass of damped Newton on the barrier objective at weight s.
void center(const Correlation& c, std::array<double, 4>& z, double s) {
  for (int iter = 0; iter < 100; ++iter) {
    std::array<double, 4> grad{};
    Mat4 hess{};
    grad[3] = -s;
    for (std::size_t y = 0; y < 3; ++y) {
      const auto l = cholesky(shifted_block(c, y, z));
      if (!l) return;
      const Mat4 w = inverse_from_cholesky(*l);
      std::array<Mat4, 4> wd;
      for (std::size_t k = 0; k < 4; ++k) wd[k] = multiply(w, direction(k));
      for (std::size_t k = 0; k < 4; ++k) {
        double tr = 0.0;
        for (std::size_t i = 0; i < 4; ++i) tr += wd[k][i][i];
        grad[k] -= tr;
        for (std::size_t j = 0; j <= k; ++j) {
          const double h = trace_product(wd[k], wd[j]);
          hess[k][j] += h;
          if (j != k) hess[j][k] += h;
        }
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const double a = 1.0 / (1.0 - z[i]);
      const double b = 1.0 / (1.0 + z[i]);
      grad[i] += a - b;
      hess[i][i] += a * a + b * b;
    }
    std::array<double, 4> neg{};
    for (std::size_t k = 0; k < 4; ++k) neg[k] = -grad[k];
    const auto step = solve4(hess, neg);
    if (!step) return;
    double decrement = 0.0;
    for (std::size_t k = 0; k < 4; ++k) decrement -= grad[k] * (*step)[k];
    if (!(decrement > 1e-18)) return;

    const auto current = barrier_value(c, z, s);
    if (!current) return;
    double tau = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls, tau *= 0.5) {
      std::array<double, 4> trial = z;
      for (std::size_t k = 0; k < 4; ++k) trial[k] += tau * (*step)[k];
      const auto value = barrier_value(c, trial, s);
      if (value && *value <= *current - 0.25 * tau * decrement) {
        z = trial;
        moved = true;
        break;
      }
    }
    if (!moved || decrement < 1e-14) return;
  }
}

}  // namespace

double block_margin(const Correlation& c, const std::array<double, 3>& abg) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t y = 0; y < c.m(); ++y) {
    margin = std::min(margin, min_eigenvalue(lemma1_block(c, y, abg[0], abg[1], abg[2])));
  }
  return margin;
}

MarginMaximum grid_seed(const Correlation& c) {
  MarginMaximum best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    for (std::size_t j = 0; j < kGridPoints; ++j) {
      for (std::size_t k = 0; k < kGridPoints; ++k) {
        const auto coord = [](std::size_t idx) { return -1.0 + 2.0 * static_cast<double>(idx) / (kGridPoints - 1); };
        const std::array<double, 3> p{coord(i), coord(j), coord(k)};
        const double v = block_margin(c, p);
        if (v > best.value) best = {p, v};
      }
    }
  }
  return best;
}

MarginMaximum maximize_block_margin(const Correlation& c, const std::array<double, 3>& start) {
  std::array<double, 4> z{};
  for (std::size_t i = 0; i < 3; ++i) z[i] = std::clamp(start[i], -1.0, 1.0) * 0.9;
  z[3] = block_margin(c, {z[0], z[1], z[2]}) - 1.0;
  double s = 1.0;
  while (kBarrierParameter / s > kBarrierGap) {
    center(c, z, s);
    s *= 8.0;
  }
  center(c, z, s);
  MarginMaximum out;
  out.point = {z[0], z[1], z[2]};
  out.value = block_margin(c, out.point);
  return out;
}

Cor33Result cor33_feasibility(const Correlation& c, double tol) {
  if (c.n() != 3 || c.m() != 3) raise(ErrorCode::kInvalidArgument, "cor33_feasibility needs a 3x3 correlation");
  Cor33Result result;
  double excess = 0.0;
  for (double v : c.values()) excess = std::max(excess, std::abs(v) - 1.0);
  if (excess > 1e-12) {
    result.status = MembershipStatus::kNonmember;
    result.margin = -excess;
    return result;
  }

  MarginMaximum best = grid_seed(c);
  const MarginMaximum polished = maximize_block_margin(c, best.point);
  if (polished.value > best.value) best = polished;

  result.margin = best.value;
  result.argmax = best.point;
  if (best.value > tol) {
    result.status = MembershipStatus::kMember;
  } else if (best.value >= -tol) {
    result.status = MembershipStatus::kBoundary;
  } else {
    result.status = MembershipStatus::kNonmember;
    return result;
  }

  PartialSymMatrix partial(6);
  partial.specify(0, 1, best.point[0]);
  partial.specify(0, 2, best.point[1]);
  partial.specify(1, 2, best.point[2]);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) partial.specify(x, 3 + y, std::clamp(c(x, y), -1.0, 1.0));
  }
  Cor33Witness witness;
  witness.alpha = best.point[0];
  witness.beta = best.point[1];
  witness.gamma = best.point[2];
  witness.margin = best.value;
  witness.gram = chordal_complete(partial, tol);
  witness.vectors = cholesky_gram_vectors(witness.gram, tol);
  result.witness = std::move(witness);
  return result;
}

}  // namespace qbell
