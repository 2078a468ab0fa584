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

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace qbell {

// Exact rationals. mpq_class keeps den > 0 and gcd(|num|, den) = 1 after
// every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Accepts "p", "-p", "p/q"; throws ErrorCode::kParseError otherwise.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

// Smallest positive integer multiple of `values` with integer entries and
// entry gcd 1. The zero vector maps to itself.
IntegerVector primitive_integer_vector(std::span<const Rational> values);
void make_primitive(IntegerVector& values);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

int sign(const Rational& value);
int sign(const Integer& value);

}  // namespace qbell
