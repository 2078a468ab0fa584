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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbell/numkernel.hpp"
#include "qbell/rational.hpp"

namespace qbell {

// Full behaviour p(a, b | x, y) for two parties with +/-1 outcomes.
class BehaviorTable {
 public:
  BehaviorTable(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  double probability(int a, int b, std::size_t x, std::size_t y) const;
  void set_probability(int a, int b, std::size_t x, std::size_t y, double value);

 private:
  std::size_t index(int a, int b, std::size_t x, std::size_t y) const;

  std::size_t n_;
  std::size_t m_;
  std::vector<double> p_;
};

struct FullCorrelator {
  Vector alice;               // c_x
  Vector bob;                 // c_y
  std::vector<Vector> joint;  // c_xy
};

// Checks normalization and no-signalling within tol, then returns the
// marginal and joint correlators. Throws kNotNormalized or
// kSignallingDetected (the message names the worst offending settings).
FullCorrelator correlators_from_behavior(const BehaviorTable& behavior, double tol);

// Joint correlators c_xy in [-1, 1], row-major n x m.
class Correlation {
 public:
  Correlation(std::size_t n, std::size_t m, std::vector<double> values);
  static Correlation from_rows(const std::vector<Vector>& rows);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  double operator()(std::size_t x, std::size_t y) const { return values_[x * m_ + y]; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<Vector> rows() const;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> values_;
};

// Pairwise angles arccos(c_xy) in [0, pi]. When every correlator is one of
// 0, +-1/2, +-1/sqrt(2), +-sqrt(3)/2, +-1 the exact angles are kept as
// rationals in units of pi.
struct AngleMatrix {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> radians;
  std::optional<std::vector<Rational>> pi_units;

  double operator()(std::size_t x, std::size_t y) const { return radians[x * m + y]; }

  static AngleMatrix from_pi_units(std::size_t n, std::size_t m, std::vector<Rational> units);
};

AngleMatrix to_angles(const Correlation& c);
Correlation from_angles(const AngleMatrix& angles);

// pi - |a_xy - a_x'y| - |a_xy' + a_x'y' - pi|; negative iff the TLM
// inequality for (x, x', y, y') is violated.
double tlm_residual(const AngleMatrix& a, std::size_t x, std::size_t x2, std::size_t y, std::size_t y2);
// Same, in pi units; requires exact angles.
Rational tlm_residual_exact(const AngleMatrix& a, std::size_t x, std::size_t x2, std::size_t y,
                            std::size_t y2);

// pi - |asin E11 + asin E12 + asin E21 - asin E22|, minimized over the four
// placements of the minus sign.
double arcsin_residual(const Correlation& c);

struct FamilyResidual {
  std::string family;
  std::vector<std::size_t> indices;
  double residual = 0.0;
};

// Residuals of every instance of the necessary conditions for Cor(3,3):
// "box" (x, y), "tlm" (x, x', y, y'), and the triple families
// "diff,diff,diff", "diff,sum,sum", "sum,diff,sum", "sum,sum,diff"
// indexed by (y, y', ybar) with not all three equal.
std::vector<FamilyResidual> lemma3_check(const AngleMatrix& a);

struct InequalityReport {
  std::string label;
  double residual = 0.0;
};

struct Cor2mResult {
  bool member = false;
  std::vector<InequalityReport> violated;
  std::vector<InequalityReport> saturated;
};

// Exact membership for Cor(2, m): boxes plus the eight cyclic inequalities
// for every pair of Bob settings. Tolerance 1e-9.
Cor2mResult cor2m_member(const Correlation& c);

enum class Lemma1Form { kPolynomial, kAngle };

// Polynomial form: per y, det(X_y) followed by the three 2x2 minors of
// A - B_y B_y^T (gamma, beta, alpha order). Angle form: per y, the 16 linear
// angle inequalities followed by the 4x4 minor written in angles. Throws
// kOutOfRange if the auxiliary values leave [-1, 1] (resp. [0, pi]).
std::vector<double> lemma1_residuals(const Correlation& c, double alpha, double beta, double gamma,
                                     Lemma1Form form);

// X_y(alpha, beta, gamma): the fully specified 4x4 block for Bob setting y.
SymMatrix lemma1_block(const Correlation& c, std::size_t y, double alpha, double beta, double gamma);

enum class MembershipStatus { kMember, kNonmember, kBoundary };
std::string to_string(MembershipStatus status);

struct Cor33Witness {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double margin = 0.0;
  SymMatrix gram{6};
  std::vector<Vector> vectors;
};

struct Cor33Result {
  MembershipStatus status = MembershipStatus::kNonmember;
  double margin = 0.0;
  std::array<double, 3> argmax{};
  std::optional<Cor33Witness> witness;
};

// min_y lambda_min(X_y(alpha, beta, gamma)); concave in (alpha, beta, gamma).
double block_margin(const Correlation& c, const std::array<double, 3>& abg);

struct MarginMaximum {
  std::array<double, 3> point{};
  double value = 0.0;
};

// Best point of the 21^3 grid over [-1, 1]^3.
MarginMaximum grid_seed(const Correlation& c);
// Log-barrier Newton ascent on max t s.t. X_y - t I >= 0, |.| <= 1, started
// at `start` (pulled strictly inside the box).
MarginMaximum maximize_block_margin(const Correlation& c, const std::array<double, 3>& start);

// Membership in Cor(3,3) via the chordal reduction to three 4x4 blocks.
// member: margin > tol, boundary: |margin| <= tol, nonmember otherwise.
// A witness (completed Gram matrix and six unit vectors) is attached to
// member and boundary results.
Cor33Result cor33_feasibility(const Correlation& c, double tol = 1e-7);

// n + m independent uniform unit vectors in R^dim (normalized Gaussians
// from a mt19937_64 stream), c_xy = <u_x, v_y>.
Correlation sample_quantum(std::size_t n, std::size_t m, std::size_t dim, std::uint64_t seed);
// The vectors behind sample_quantum, alice first.
std::vector<Vector> sample_unit_vectors(std::size_t count, std::size_t dim, std::uint64_t seed);

}  // namespace qbell
