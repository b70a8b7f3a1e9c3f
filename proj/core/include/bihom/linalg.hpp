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
#include <functional>
#include <optional>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/rational.hpp"

namespace bihom {

/// A linear subspace of Q^ambient_dim held by a linearly independent basis.
///
/// Bases are not canonical. Compare subspaces with same_span(), never by
/// comparing basis vectors.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  /// Reduces an arbitrary spanning list to an independent basis, keeping the
  /// first independent vectors of the list in order.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in basis(), or nullopt when v is outside the span.
  std::optional<Vector> coordinates_of(const Vector& v) const;

  /// Σ c_i basis_i.
  Vector combine(const Vector& coefficients) const;

  /// Matrix whose columns are the basis vectors.
  Matrix as_columns() const;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

struct RankNullspace {
  std::size_t rank = 0;
  Subspace kernel;
};

/// Exact Gaussian elimination; rank + kernel.dim() == m.cols().
RankNullspace rank_nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A particular solution of m x = b, or nullopt when b is outside the
/// column space. Throws InputError if b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, const Vector& b);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // span(a) ⊇ span(b)
};

/// Throws InputError on ambient mismatch.
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// Mutual containment.
bool same_span(const Subspace& a, const Subspace& b);

/// Assembles the matrix of a linear map Q^input_dim -> Q^output_dim by
/// evaluating `map` on every unit vector. The map must be linear.
Matrix matrix_of(std::size_t input_dim, std::size_t output_dim,
                 const std::function<Vector(const Vector&)>& map);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

}  // namespace bihom
