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
#include <initializer_list>
#include <span>
#include <vector>

namespace qbell {

using Vector = std::vector<double>;

// Dense real symmetric matrix. Only the upper triangle is stored (row-major),
// so symmetry holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix constant(std::size_t dim, double value);
  // Throws kInvalidArgument on ragged or asymmetric (beyond 1e-12) input.
  static SymMatrix from_rows(const std::vector<Vector>& rows);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static SymMatrix gram(std::span<const Vector> vectors);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double value) noexcept { data_[index(i, j)] = value; }

  SymMatrix principal(std::span<const std::size_t> indices) const;
  std::vector<Vector> to_rows() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return i * dim_ - i * (i + 1) / 2 + j;
  }

  std::size_t dim_;
  std::vector<double> data_;
};

struct EigenDecomposition {
  Vector values;               // ascending
  std::vector<Vector> vectors; // vectors[k] is the unit eigenvector for values[k]
};

// Cyclic Jacobi rotations; eigenvalues accurate to ~1e-12 absolute for the
// small, unit-scaled matrices used here.
EigenDecomposition symmetric_eigen(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);
bool is_psd(const SymMatrix& m, double tol);

inline constexpr std::size_t kMaxSylvesterDim = 12;

// Sylvester's criterion, psd form: every one of the 2^dim - 1 principal
// minors is >= 0. Minors are evaluated exactly over the rationals (the
// doubles are taken at face value), so boundary matrices are not blurred by
// rounding. Throws kDimensionTooLarge past kMaxSylvesterDim.
bool sylvester_psd(const SymMatrix& m);

// A - B D^{-1} B^T for M = [[A, B], [B^T, D]] with A of size k.
// Throws kSingularBlock when D has a pivot below 1e-12.
SymMatrix schur_complement(const SymMatrix& m, std::size_t k);

// Pivoted semidefinite Cholesky. Returns dim unit vectors w_i in R^dim with
// <w_i, w_j> = M(i, j). Pivots in [-tol, 1e-12] are treated as zero.
std::vector<Vector> cholesky_gram_vectors(const SymMatrix& m, double tol);

double inner(std::span<const double> a, std::span<const double> b);

}  // namespace qbell
