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

#include "qbell/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qbell/errors.hpp"
#include "qbell/rational.hpp"

namespace qbell {

namespace {

constexpr double kPivotTol = 1e-12;

// Exact determinant by Gaussian elimination over Q.
Rational exact_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(a[row][col]) == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

}  // namespace

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * (dim + 1) / 2, 0.0) {
  if (dim == 0) raise(ErrorCode::kInvalidArgument, "SymMatrix dimension must be >= 1");
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::constant(std::size_t dim, double value) {
  SymMatrix m(dim);
  std::fill(m.data_.begin(), m.data_.end(), value);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) raise(ErrorCode::kInvalidArgument, "matrix rows must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-12) {
        raise(ErrorCode::kInvalidArgument, "matrix is not symmetric");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Vector> copy;
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(copy);
}

SymMatrix SymMatrix::gram(std::span<const Vector> vectors) {
  SymMatrix m(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) m.set(i, j, inner(vectors[i], vectors[j]));
  }
  return m;
}

SymMatrix SymMatrix::principal(std::span<const std::size_t> indices) const {
  SymMatrix sub(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i; j < indices.size(); ++j) sub.set(i, j, (*this)(indices[i], indices[j]));
  }
  return sub;
}

std::vector<Vector> SymMatrix::to_rows() const {
  std::vector<Vector> rows(dim_, Vector(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) rows[i][j] = (*this)(i, j);
  }
  return rows;
}

double inner(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

EigenDecomposition symmetric_eigen(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Vector> a = m.to_rows();
  std::vector<Vector> v(n, Vector(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  double total = 0.0;
  for (const auto& row : a) total += inner(row, row);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off <= 1e-34 * total + 1e-300) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
  EigenDecomposition out;
  for (std::size_t k : order) {
    out.values.push_back(a[k][k]);
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i][k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

double min_eigenvalue(const SymMatrix& m) {
  if (m.dim() == 1) return m(0, 0);
  return symmetric_eigen(m).values.front();
}

bool is_psd(const SymMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

bool sylvester_psd(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kMaxSylvesterDim) {
    raise(ErrorCode::kDimensionTooLarge, "Sylvester enumeration is capped at dimension 12");
  }
  std::vector<std::vector<Rational>> exact(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) exact[i][j] = Rational(m(i, j));
  }
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    std::vector<std::vector<Rational>> sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = exact[idx[i]][idx[j]];
    }
    if (sgn(exact_determinant(std::move(sub))) < 0) return false;
  }
  return true;
}

SymMatrix schur_complement(const SymMatrix& m, std::size_t k) {
  const std::size_t n = m.dim();
  if (k < 1 || k >= n) raise(ErrorCode::kInvalidArgument, "block split must satisfy 1 <= k < dim");
  const std::size_t r = n - k;
  // Solve D X = B^T by Gauss-Jordan with partial pivoting; X is r x k.
  std::vector<Vector> d(r, Vector(r));
  std::vector<Vector> x(r, Vector(k));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) d[i][j] = m(k + i, k + j);
    for (std::size_t j = 0; j < k; ++j) x[i][j] = m(k + i, j);
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < r; ++i) {
      if (std::abs(d[i][col]) > std::abs(d[pivot][col])) pivot = i;
    }
    if (std::abs(d[pivot][col]) < kPivotTol) {
      raise(ErrorCode::kSingularBlock, "trailing block is not invertible");
    }
    std::swap(d[pivot], d[col]);
    std::swap(x[pivot], x[col]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col) continue;
      const double f = d[i][col] / d[col][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < r; ++j) d[i][j] -= f * d[col][j];
      for (std::size_t j = 0; j < k; ++j) x[i][j] -= f * x[col][j];
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) x[i][j] /= d[i][i];
  }
  SymMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      double acc = m(i, j);
      for (std::size_t l = 0; l < r; ++l) acc -= m(i, k + l) * x[l][j];
      out.set(i, j, acc);
    }
  }
  return out;
}

std::vector<Vector> cholesky_gram_vectors(const SymMatrix& m, double tol) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m(i, i) - 1.0) > 1e-9) {
      raise(ErrorCode::kNotUnitDiagonal, "Gram factorization requires a unit diagonal");
    }
  }
  std::vector<Vector> residual = m.to_rows();
  std::vector<Vector> factor(n, Vector(n, 0.0));
  std::vector<bool> done(n, false);

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && (pivot == n || residual[i][i] > residual[pivot][pivot])) pivot = i;
    }
    const double d = residual[pivot][pivot];
    if (d < -tol) raise(ErrorCode::kNotPsd, "negative pivot in semidefinite factorization");
    if (d <= kPivotTol) break;
    const double root = std::sqrt(d);
    done[pivot] = true;
    factor[pivot][step] = root;
    for (std::size_t j = 0; j < n; ++j) {
      if (!done[j]) factor[j][step] = residual[j][pivot] / root;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (!done[l]) residual[j][l] -= factor[j][step] * factor[l][step];
      }
    }
  }

  // Whatever is left must be (numerically) zero for a psd input.
  const double slack = tol + 1e-6;
  for (std::size_t j = 0; j < n; ++j) {
    if (done[j]) continue;
    for (std::size_t l = 0; l < n; ++l) {
      if (done[l]) continue;
      if ((j == l && residual[j][l] < -tol) || (j != l && std::abs(residual[j][l]) > slack)) {
        raise(ErrorCode::kNotPsd, "matrix is not positive semidefinite");
      }
    }
  }
  for (auto& w : factor) {
    const double norm = std::sqrt(inner(w, w));
    if (norm == 0.0) raise(ErrorCode::kNotPsd, "degenerate Gram vector");
    for (auto& x : w) x /= norm;
  }
  return factor;
}

}  // namespace qbell
