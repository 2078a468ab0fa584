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

#include "qbell/rational.hpp"

#include <cctype>

#include "qbell/errors.hpp"

namespace qbell {

Rational parse_rational(const std::string& text) {
  const auto valid = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() <= start) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    raise(ErrorCode::kParseError, "not a rational: '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) raise(ErrorCode::kParseError, "zero denominator: '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

IntegerVector primitive_integer_vector(std::span<const Rational> values) {
  Integer lcm = 1;
  for (const auto& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  IntegerVector out;
  out.reserve(values.size());
  for (const auto& v : values) {
    out.push_back(v.get_num() * (lcm / v.get_den()));
  }
  make_primitive(out);
  return out;
}

void make_primitive(IntegerVector& values) {
  Integer g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& v : values) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  }
  return acc;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

int sign(const Rational& value) { return sgn(value); }
int sign(const Integer& value) { return sgn(value); }

}  // namespace qbell
