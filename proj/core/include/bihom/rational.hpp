// Copyright 2026 The bihom Authors. All rights reserved.
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
#include <string_view>
#include <vector>

namespace bihom {

// GMP keeps every mpq_class result in lowest terms with a positive
// denominator, so equality is structural.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading '-', q > 0). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical literal: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);

/// a += s * b, skipping the work when s is zero.
void axpy(Vector& a, const Rational& s, const Vector& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace bihom
