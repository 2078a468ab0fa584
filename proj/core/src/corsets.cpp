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

#include "qbell/corsets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qbell/errors.hpp"

namespace qbell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoxSlack = 1e-12;
constexpr double kMemberTol = 1e-9;

std::size_t outcome_index(int outcome) {
  if (outcome != 1 && outcome != -1) raise(ErrorCode::kInvalidArgument, "outcomes must be +1 or -1");
  return outcome == 1 ? 0 : 1;
}

// cos(pi * q) for the rationals q recognised below.
struct ExactAngle {
  double cosine;
  long num;
  long den;
};

constexpr double kHalfSqrt2 = 0.70710678118654752440;
constexpr double kHalfSqrt3 = 0.86602540378443864676;

constexpr std::array<ExactAngle, 9> kExactAngles{{
    {1.0, 0, 1},
    {kHalfSqrt3, 1, 6},
    {kHalfSqrt2, 1, 4},
    {0.5, 1, 3},
    {0.0, 1, 2},
    {-0.5, 2, 3},
    {-kHalfSqrt2, 3, 4},
    {-kHalfSqrt3, 5, 6},
    {-1.0, 1, 1},
}};

std::optional<Rational> exact_angle(double c) {
  for (const auto& e : kExactAngles) {
    if (std::abs(c - e.cosine) <= 1e-15) return Rational(e.num, e.den);
  }
  return std::nullopt;
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

BehaviorTable::BehaviorTable(std::size_t n, std::size_t m) : n_(n), m_(m), p_(4 * n * m, 0.0) {
  if (n == 0 || m == 0) raise(ErrorCode::kInvalidArgument, "behaviour needs n, m >= 1");
}

std::size_t BehaviorTable::index(int a, int b, std::size_t x, std::size_t y) const {
  if (x >= n_ || y >= m_) raise(ErrorCode::kInvalidArgument, "setting index out of range");
  return ((x * m_ + y) * 2 + outcome_index(a)) * 2 + outcome_index(b);
}

double BehaviorTable::probability(int a, int b, std::size_t x, std::size_t y) const {
  return p_[index(a, b, x, y)];
}

void BehaviorTable::set_probability(int a, int b, std::size_t x, std::size_t y, double value) {
  p_[index(a, b, x, y)] = value;
}

FullCorrelator correlators_from_behavior(const BehaviorTable& behavior, double tol) {
  const std::size_t n = behavior.n();
  const std::size_t m = behavior.m();
  constexpr std::array<int, 2> kOutcomes{1, -1};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      double total = 0.0;
      for (int a : kOutcomes) {
        for (int b : kOutcomes) {
          const double p = behavior.probability(a, b, x, y);
          if (p < -tol || p > 1.0 + tol) {
            raise(ErrorCode::kNotNormalized, "probability outside [0, 1]");
          }
          total += p;
        }
      }
      if (std::abs(total - 1.0) > tol) {
        std::ostringstream msg;
        msg << "probabilities for (x, y) = (" << x << ", " << y << ") sum to " << total;
        raise(ErrorCode::kNotNormalized, msg.str());
      }
    }
  }

  const auto alice_marginal = [&](int a, std::size_t x, std::size_t y) {
    return behavior.probability(a, 1, x, y) + behavior.probability(a, -1, x, y);
  };
  const auto bob_marginal = [&](int b, std::size_t x, std::size_t y) {
    return behavior.probability(1, b, x, y) + behavior.probability(-1, b, x, y);
  };

  double worst = 0.0;
  std::string where;
  for (int a : kOutcomes) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 1; y < m; ++y) {
        const double d = std::abs(alice_marginal(a, x, y) - alice_marginal(a, x, 0));
        if (d > worst) {
          worst = d;
          std::ostringstream msg;
          msg << "Alice marginal a=" << a << " x=" << x << " differs between y=0 and y=" << y;
          where = msg.str();
        }
      }
    }
  }
  for (int b : kOutcomes) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t x = 1; x < n; ++x) {
        const double d = std::abs(bob_marginal(b, x, y) - bob_marginal(b, 0, y));
        if (d > worst) {
          worst = d;
          std::ostringstream msg;
          msg << "Bob marginal b=" << b << " y=" << y << " differs between x=0 and x=" << x;
          where = msg.str();
        }
      }
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << where << " (deviation " << worst << ")";
    raise(ErrorCode::kSignallingDetected, msg.str());
  }

  FullCorrelator out;
  out.alice.assign(n, 0.0);
  out.bob.assign(m, 0.0);
  out.joint.assign(n, Vector(m, 0.0));
  for (std::size_t x = 0; x < n; ++x) out.alice[x] = alice_marginal(1, x, 0) - alice_marginal(-1, x, 0);
  for (std::size_t y = 0; y < m; ++y) out.bob[y] = bob_marginal(1, 0, y) - bob_marginal(-1, 0, y);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      double c = 0.0;
      for (int a : kOutcomes) {
        for (int b : kOutcomes) c += a * b * behavior.probability(a, b, x, y);
      }
      out.joint[x][y] = c;
    }
  }
  return out;
}

Correlation::Correlation(std::size_t n, std::size_t m, std::vector<double> values)
    : n_(n), m_(m), values_(std::move(values)) {
  if (n == 0 || m == 0) raise(ErrorCode::kInvalidArgument, "correlation needs n, m >= 1");
  if (values_.size() != n * m) raise(ErrorCode::kInvalidArgument, "correlation has wrong entry count");
  for (double v : values_) {
    if (!std::isfinite(v)) raise(ErrorCode::kInvalidArgument, "correlation entries must be finite");
  }
}

Correlation Correlation::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) raise(ErrorCode::kInvalidArgument, "correlation needs at least one row");
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) raise(ErrorCode::kInvalidArgument, "ragged correlation rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Correlation(rows.size(), rows.front().size(), std::move(flat));
}

std::vector<Vector> Correlation::rows() const {
  std::vector<Vector> out(n_, Vector(m_));
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < m_; ++y) out[x][y] = (*this)(x, y);
  }
  return out;
}

AngleMatrix AngleMatrix::from_pi_units(std::size_t n, std::size_t m, std::vector<Rational> units) {
  if (units.size() != n * m) raise(ErrorCode::kInvalidArgument, "angle matrix has wrong entry count");
  AngleMatrix a;
  a.n = n;
  a.m = m;
  for (const auto& u : units) {
    if (u < 0 || u > 1) raise(ErrorCode::kOutOfRange, "angles must lie in [0, pi]");
    a.radians.push_back(u.get_d() * kPi);
  }
  a.pi_units = std::move(units);
  return a;
}

AngleMatrix to_angles(const Correlation& c) {
  AngleMatrix a;
  a.n = c.n();
  a.m = c.m();
  std::vector<Rational> units;
  bool exact = true;
  for (double v : c.values()) {
    if (v < -1.0 - kBoxSlack || v > 1.0 + kBoxSlack) {
      raise(ErrorCode::kOutOfRange, "correlator outside [-1, 1]");
    }
    a.radians.push_back(std::acos(clamp_unit(v)));
    if (exact) {
      if (auto q = exact_angle(v)) {
        units.push_back(*q);
      } else {
        exact = false;
      }
    }
  }
  if (exact) a.pi_units = std::move(units);
  return a;
}

Correlation from_angles(const AngleMatrix& angles) {
  std::vector<double> values;
  for (double r : angles.radians) {
    if (r < -kBoxSlack || r > kPi + kBoxSlack) raise(ErrorCode::kOutOfRange, "angle outside [0, pi]");
    values.push_back(std::cos(r));
  }
  return Correlation(angles.n, angles.m, std::move(values));
}

double tlm_residual(const AngleMatrix& a, std::size_t x, std::size_t x2, std::size_t y, std::size_t y2) {
  return kPi - std::abs(a(x, y) - a(x2, y)) - std::abs(a(x, y2) + a(x2, y2) - kPi);
}

Rational tlm_residual_exact(const AngleMatrix& a, std::size_t x, std::size_t x2, std::size_t y,
                            std::size_t y2) {
  if (!a.pi_units) raise(ErrorCode::kInvalidArgument, "angle matrix has no exact form");
  const auto& u = *a.pi_units;
  const auto at = [&](std::size_t i, std::size_t j) { return u[i * a.m + j]; };
  return Rational(1) - abs(Rational(at(x, y) - at(x2, y))) - abs(Rational(at(x, y2) + at(x2, y2) - 1));
}

double arcsin_residual(const Correlation& c) {
  if (c.n() != 2 || c.m() != 2) raise(ErrorCode::kInvalidArgument, "arcsin inequality needs a 2x2 correlation");
  std::array<double, 4> s{};
  for (std::size_t k = 0; k < 4; ++k) s[k] = std::asin(clamp_unit(c.values()[k]));
  const double total = s[0] + s[1] + s[2] + s[3];
  double best = kPi;
  for (std::size_t minus = 0; minus < 4; ++minus) {
    best = std::min(best, kPi - std::abs(total - 2.0 * s[minus]));
  }
  return best;
}

std::vector<FamilyResidual> lemma3_check(const AngleMatrix& a) {
  if (a.n != 3 || a.m != 3) raise(ErrorCode::kInvalidArgument, "lemma3_check needs a 3x3 angle matrix");
  std::vector<FamilyResidual> out;
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      out.push_back({"box", {x, y}, std::min(a(x, y), kPi - a(x, y))});
    }
  }
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t x2 = 0; x2 < 3; ++x2) {
      if (x == x2) continue;
      for (std::size_t y = 0; y < 3; ++y) {
        for (std::size_t y2 = 0; y2 < 3; ++y2) {
          if (y == y2) continue;
          out.push_back({"tlm", {x, x2, y, y2}, tlm_residual(a, x, x2, y, y2)});
        }
      }
    }
  }
  const auto diff = [&](std::size_t x, std::size_t x2, std::size_t y) { return std::abs(a(x, y) - a(x2, y)); };
  const auto sum = [&](std::size_t x, std::size_t x2, std::size_t y) {
    return std::abs(a(x, y) + a(x2, y) - kPi);
  };
  for (std::size_t y = 0; y < 3; ++y) {
    for (std::size_t y2 = 0; y2 < 3; ++y2) {
      for (std::size_t yb = 0; yb < 3; ++yb) {
        if (y == y2 && y2 == yb) continue;
        const std::vector<std::size_t> idx{y, y2, yb};
        out.push_back({"diff,diff,diff", idx, 2 * kPi - diff(0, 1, y) - diff(1, 2, y2) - diff(0, 2, yb)});
        out.push_back({"diff,sum,sum", idx, 2 * kPi - diff(0, 1, y) - sum(1, 2, y2) - sum(0, 2, yb)});
        out.push_back({"sum,diff,sum", idx, 2 * kPi - sum(0, 1, y) - diff(1, 2, y2) - sum(0, 2, yb)});
        out.push_back({"sum,sum,diff", idx, 2 * kPi - sum(0, 1, y) - sum(1, 2, y2) - diff(0, 2, yb)});
      }
    }
  }
  return out;
}

Cor2mResult cor2m_member(const Correlation& c) {
  if (c.n() != 2) raise(ErrorCode::kInvalidArgument, "cor2m_member needs n = 2");
  Cor2mResult result;
  const auto record = [&](std::string label, double residual) {
    InequalityReport report{std::move(label), residual};
    if (residual < -kMemberTol) {
      result.violated.push_back(report);
    } else if (residual <= kMemberTol) {
      result.saturated.push_back(report);
    }
  };
  for (double v : c.values()) {
    if (v < -1.0 - kBoxSlack || v > 1.0 + kBoxSlack) {
      result.violated.push_back({"box", -(std::abs(v) - 1.0)});
    }
  }
  if (!result.violated.empty()) return result;

  const AngleMatrix a = to_angles(c);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < c.m(); ++y) {
      const std::string name = "c" + std::to_string(x + 1) + std::to_string(y + 1);
      record("0 <= " + name, a(x, y));
      record(name + " <= pi", kPi - a(x, y));
    }
  }
  for (std::size_t i = 0; i < c.m(); ++i) {
    for (std::size_t j = i + 1; j < c.m(); ++j) {
      // The four angles of the 4-cycle; exactly one enters with a minus sign.
      const std::array<std::pair<std::size_t, std::size_t>, 4> cells{{{0, i}, {0, j}, {1, i}, {1, j}}};
      double total = 0.0;
      for (const auto& [x, y] : cells) total += a(x, y);
      for (const auto& [mx, my] : cells) {
        std::string expr;
        for (const auto& [x, y] : cells) {
          if (x == mx && y == my) continue;
          expr += (expr.empty() ? "" : "+") + ("c" + std::to_string(x + 1) + std::to_string(y + 1));
        }
        expr += "-c" + std::to_string(mx + 1) + std::to_string(my + 1);
        const double value = total - 2.0 * a(mx, my);
        record("0 <= " + expr, value);
        record(expr + " <= 2pi", 2.0 * kPi - value);
      }
    }
  }
  result.member = result.violated.empty();
  return result;
}

SymMatrix lemma1_block(const Correlation& c, std::size_t y, double alpha, double beta, double gamma) {
  SymMatrix x = SymMatrix::identity(4);
  x.set(0, 1, alpha);
  x.set(0, 2, beta);
  x.set(1, 2, gamma);
  for (std::size_t i = 0; i < 3; ++i) x.set(i, 3, c(i, y));
  return x;
}

std::vector<double> lemma1_residuals(const Correlation& c, double alpha, double beta, double gamma,
                                     Lemma1Form form) {
  if (c.n() != 3 || c.m() != 3) raise(ErrorCode::kInvalidArgument, "lemma1_residuals needs a 3x3 correlation");
  std::vector<double> out;
  if (form == Lemma1Form::kPolynomial) {
    for (double v : {alpha, beta, gamma}) {
      if (v < -1.0 || v > 1.0) raise(ErrorCode::kOutOfRange, "alpha, beta, gamma must lie in [-1, 1]");
    }
    const double a = alpha, b = beta, g = gamma;
    for (std::size_t y = 0; y < 3; ++y) {
      const double c1 = c(0, y), c2 = c(1, y), c3 = c(2, y);
      out.push_back(1 - (c1 * c1 + c2 * c2 + c3 * c3) - a * a - b * b - g * g + 2 * c1 * c2 * a +
                    2 * c1 * c3 * b + 2 * c2 * c3 * g + 2 * a * b * g + c3 * c3 * a * a + c2 * c2 * b * b +
                    c1 * c1 * g * g - 2 * c2 * c3 * a * b - 2 * c1 * c3 * a * g - 2 * c1 * c2 * b * g);
      out.push_back(1 - c2 * c2 - c3 * c3 - g * g + 2 * c2 * c3 * g);
      out.push_back(1 - c1 * c1 - c3 * c3 - b * b + 2 * c1 * c3 * b);
      out.push_back(1 - c1 * c1 - c2 * c2 - a * a + 2 * c1 * c2 * a);
    }
    return out;
  }

  for (double v : {alpha, beta, gamma}) {
    if (v < 0.0 || v > kPi) raise(ErrorCode::kOutOfRange, "angles alpha, beta, gamma must lie in [0, pi]");
  }
  const AngleMatrix angles = to_angles(c);
  const double a = alpha, b = beta, g = gamma;
  for (std::size_t y = 0; y < 3; ++y) {
    const double h1 = angles(0, y), h2 = angles(1, y), h3 = angles(2, y);
    const std::array<double, 16> linear{
        b + g - a,  a + g - b,  a + b - g,  2 * kPi - a - b - g,
        h1 + h2 - a, h2 + a - h1, a + h1 - h2, 2 * kPi - a - h1 - h2,
        h1 + h3 - b, h3 + b - h1, b + h1 - h3, 2 * kPi - b - h1 - h3,
        h2 + h3 - g, h3 + g - h2, g + h2 - h3, 2 * kPi - g - h2 - h3,
    };
    out.insert(out.end(), linear.begin(), linear.end());
    const double s1 = std::sin(h1), s2 = std::sin(h2), s3 = std::sin(h3);
    const double k1 = std::cos(h1), k2 = std::cos(h2), k3 = std::cos(h3);
    const double da = std::cos(a) - k1 * k2;
    const double db = std::cos(b) - k1 * k3;
    const double dg = std::cos(g) - k2 * k3;
    out.push_back(std::pow(s1 * s2 * s3, 2) - std::pow(s3 * da, 2) - std::pow(s2 * db, 2) -
                  std::pow(s1 * dg, 2) + 2 * da * db * dg);
  }
  return out;
}

std::string to_string(MembershipStatus status) {
  switch (status) {
    case MembershipStatus::kMember: return "member";
    case MembershipStatus::kNonmember: return "nonmember";
    case MembershipStatus::kBoundary: return "boundary";
  }
  return "unknown";
}

std::vector<Vector> sample_unit_vectors(std::size_t count, std::size_t dim, std::uint64_t seed) {
  if (dim == 0) raise(ErrorCode::kInvalidArgument, "vector dimension must be >= 1");
  std::mt19937_64 rng(seed);
  // Box-Muller on 53-bit uniforms; std::normal_distribution is not
  // reproducible across standard libraries.
  const auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<Vector> out;
  out.reserve(count);
  while (out.size() < count) {
    Vector v(dim);
    for (auto& e : v) e = std::sqrt(-2.0 * std::log(uniform())) * std::cos(2.0 * kPi * uniform());
    const double norm = std::sqrt(inner(v, v));
    if (norm < 1e-12) continue;
    for (auto& e : v) e /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

Correlation sample_quantum(std::size_t n, std::size_t m, std::size_t dim, std::uint64_t seed) {
  const auto vectors = sample_unit_vectors(n + m, dim, seed);
  std::vector<double> values;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) values.push_back(clamp_unit(inner(vectors[x], vectors[n + y])));
  }
  return Correlation(n, m, std::move(values));
}

}  // namespace qbell
