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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/rational.hpp"

namespace bihom {

/// An n-linear map (Q^in_dim)^n -> Q^out_dim stored densely.
///
/// Coordinates are ordered lexicographically by (i1, ..., in, k): entry
/// (i1..in, k) is the e_k coefficient of f(e_i1, ..., e_in). Products,
/// cochains, deformation terms and cocycles all share this layout.
class Multilinear {
 public:
  Multilinear() = default;
  Multilinear(std::size_t arity, std::size_t in_dim, std::size_t out_dim);

  static Multilinear from_coordinates(std::size_t arity, std::size_t in_dim,
                                      std::size_t out_dim, Vector coords);

  std::size_t arity() const { return arity_; }
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  /// Number of input tuples, in_dim^arity.
  std::size_t tuple_count() const { return tuples_; }
  std::size_t size() const { return data_.size(); }

  const Vector& coordinates() const { return data_; }

  Rational& at(std::span<const std::size_t> tuple, std::size_t k);
  const Rational& at(std::span<const std::size_t> tuple, std::size_t k) const;
  Rational& at(std::initializer_list<std::size_t> tuple, std::size_t k) {
    return at(std::span<const std::size_t>(tuple.begin(), tuple.size()), k);
  }
  const Rational& at(std::initializer_list<std::size_t> tuple,
                     std::size_t k) const {
    return at(std::span<const std::size_t>(tuple.begin(), tuple.size()), k);
  }

  /// f(e_i1, ..., e_in).
  Vector value(std::span<const std::size_t> tuple) const;
  Vector value(std::initializer_list<std::size_t> tuple) const {
    return value(std::span<const std::size_t>(tuple.begin(), tuple.size()));
  }
  void set_value(std::span<const std::size_t> tuple, const Vector& v);

  /// Multilinear extension f(v1, ..., vn) on arbitrary vectors.
  Vector evaluate(std::span<const Vector> args) const;

  /// g(x1..xn) = f(m x1, ..., m xn).
  Multilinear precompose(const Matrix& m) const;
  /// g = p ∘ f.
  Multilinear postcompose(const Matrix& p) const;
  /// g(x1..xn) = f(x_{perm[0]}, ..., x_{perm[n-1]}).
  Multilinear permute_inputs(std::span<const std::size_t> perm) const;

  bool is_zero() const;

  Multilinear& operator+=(const Multilinear& other);
  Multilinear& operator-=(const Multilinear& other);
  Multilinear& operator*=(const Rational& s);

  friend bool operator==(const Multilinear& a, const Multilinear& b) = default;

  /// Decodes a flat tuple index into (i1, ..., in).
  std::vector<std::size_t> tuple_at(std::size_t flat) const;
  std::size_t flat_index(std::span<const std::size_t> tuple) const;

 private:
  std::size_t arity_ = 0;
  std::size_t in_dim_ = 0;
  std::size_t out_dim_ = 0;
  std::size_t tuples_ = 0;
  Vector data_;
};

Multilinear operator+(Multilinear a, const Multilinear& b);
Multilinear operator-(Multilinear a, const Multilinear& b);
Multilinear operator*(const Rational& s, Multilinear f);

/// Calls fn(tuple) for every tuple in [0, dim)^arity in lexicographic order.
template <typename Fn>
void for_each_tuple(std::size_t arity, std::size_t dim, Fn&& fn) {
  std::vector<std::size_t> tuple(arity, 0);
  if (dim == 0 && arity > 0) return;
  while (true) {
    fn(std::span<const std::size_t>(tuple));
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < dim) break;
      tuple[pos] = 0;
      if (pos == 0) return;
    }
    if (arity == 0) return;
  }
}

}  // namespace bihom
