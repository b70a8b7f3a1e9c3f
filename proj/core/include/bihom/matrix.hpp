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
#include <optional>
#include <span>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Dense row-major rational matrix. Acts on column coordinate vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  static Matrix from_rows(const std::vector<Vector>& rows);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  /// Row-major reshape of a length rows*cols vector.
  static Matrix from_coordinates(std::size_t rows, std::size_t cols,
                                 const Vector& coords);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  /// Row-major entries; doubles as the End(A) coordinate vector.
  const Vector& coordinates() const { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  /// Two-sided inverse, or nullopt when singular.
  std::optional<Matrix> inverse() const;

  /// Integer power; negative exponents need an invertible matrix and throw
  /// PreconditionError otherwise.
  Matrix power(int exponent) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);

/// Block-diagonal direct sum a ⊕ b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// u v − v u.
Matrix commutator(const Matrix& u, const Matrix& v);

}  // namespace bihom
