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
#include "bihom/linalg.hpp"

#include "bihom/errors.hpp"

namespace bihom {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (sgn(m(r, col)) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = col; c < m.cols(); ++c) swap(m(found, c), m(pivot_row, c));
    }
    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (sgn(m(pivot_row, c)) != 0) m(pivot_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m(pivot_row, c)) != 0) m(r, c) -= factor * m(pivot_row, c);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

RankNullspace rank_nullspace(const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    kernel.push_back(std::move(v));
  }
  RankNullspace out;
  out.rank = pivots.size();
  out.kernel = Subspace::span(m.cols(), kernel);
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix reduced = m;
  return row_reduce(reduced).size();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace out(ambient_dim);
  // Incremental echelon copy used only for independence testing.
  std::vector<Vector> echelon;
  std::vector<std::size_t> lead;
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InputError("subspace: vector length mismatch");
    Vector w = v;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if (sgn(w[lead[i]]) != 0) {
        const Rational factor = w[lead[i]];
        axpy(w, -factor, echelon[i]);
      }
    }
    std::size_t p = 0;
    while (p < w.size() && sgn(w[p]) == 0) ++p;
    if (p == w.size()) continue;
    const Rational inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if (sgn(echelon[i][p]) != 0) {
        const Rational factor = echelon[i][p];
        axpy(echelon[i], -factor, w);
      }
    }
    echelon.push_back(std::move(w));
    lead.push_back(p);
    out.basis_.push_back(v);
  }
  return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, units);
}

std::optional<Vector> Subspace::coordinates_of(const Vector& v) const {
  if (v.size() != ambient_dim_) throw InputError("subspace: vector length mismatch");
  if (basis_.empty()) {
    if (bihom::is_zero(v)) return Vector{};
    return std::nullopt;
  }
  return solve(as_columns(), v);
}

bool Subspace::contains(const Vector& v) const { return coordinates_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InputError("subspace: ambient mismatch");
  if (other.basis_.empty()) return true;
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_dim_, all).dim() == dim();
}

Vector Subspace::combine(const Vector& coefficients) const {
  if (coefficients.size() != basis_.size()) throw InputError("subspace: coefficient count mismatch");
  Vector out = zero_vector(ambient_dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(out, coefficients[i], basis_[i]);
  return out;
}

Matrix Subspace::as_columns() const { return Matrix::from_columns(ambient_dim_, basis_); }

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  SubspaceOps out;
  out.sum = subspace_sum(a, b);
  out.intersection = subspace_intersection(a, b);
  out.contains = a.contains(b);
  return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace: ambient mismatch");
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  // Solve Σ c_i a_i − Σ d_j b_j = 0; the intersection is spanned by Σ c_i a_i.
  Matrix stacked(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) stacked(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, a.dim() + j) = -b.basis()[j][r];
  const auto kernel = rank_nullspace(stacked).kernel;
  std::vector<Vector> vectors;
  for (const auto& c : kernel.basis()) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, c[i], a.basis()[i]);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

bool same_span(const Subspace& a, const Subspace& b) {
  return a.contains(b) && b.contains(a);
}

Matrix matrix_of(std::size_t input_dim, std::size_t output_dim,
                 const std::function<Vector(const Vector&)>& map) {
  Matrix m(output_dim, input_dim);
  for (std::size_t j = 0; j < input_dim; ++j) {
    const Vector column = map(unit_vector(input_dim, j));
    if (column.size() != output_dim) throw InputError("matrix_of: output length mismatch");
    for (std::size_t i = 0; i < output_dim; ++i) {
      if (sgn(column[i]) != 0) m(i, j) = column[i];
    }
  }
  return m;
}

}  // namespace bihom
