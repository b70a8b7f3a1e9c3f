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
#include "bihom/algebra.hpp"

#include <string>

#include "bihom/linalg.hpp"

namespace bihom {

namespace {

std::vector<Vector> columns_of(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

void check_length(const BiHomAlgebra& alg, const Vector& v) {
  if (v.size() != alg.dim()) {
    throw InputError("algebra: vector of length " + std::to_string(v.size()) +
                     " for an algebra of dimension " + std::to_string(alg.dim()));
  }
}

}  // namespace

BiHomAlgebra::BiHomAlgebra(Multilinear mu, Matrix alpha, Matrix beta)
    : mu_(std::move(mu)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (mu_.arity() != 2 || mu_.in_dim() != mu_.out_dim()) {
    throw InputError("algebra: product must be a bilinear map A×A→A");
  }
  const std::size_t n = mu_.in_dim();
  if (alpha_.rows() != n || alpha_.cols() != n || beta_.rows() != n || beta_.cols() != n) {
    throw InputError("algebra: twist matrices must be " + std::to_string(n) + "×" +
                     std::to_string(n));
  }
}

Vector BiHomAlgebra::multiply(const Vector& x, const Vector& y) const {
  check_length(*this, x);
  check_length(*this, y);
  const Vector args[] = {x, y};
  return mu_.evaluate(args);
}

Matrix BiHomAlgebra::left_multiplication(const Vector& x) const {
  check_length(*this, x);
  return matrix_of(dim(), dim(), [&](const Vector& y) { return multiply(x, y); });
}

Matrix BiHomAlgebra::right_multiplication(const Vector& y) const {
  check_length(*this, y);
  return matrix_of(dim(), dim(), [&](const Vector& x) { return multiply(x, y); });
}

Matrix BiHomAlgebra::twist_power(int k, int l) const {
  return alpha_.power(k) * beta_.power(l);
}

bool BiHomAlgebra::is_regular() const {
  return alpha_.inverse().has_value() && beta_.inverse().has_value();
}

AlgebraMap::AlgebraMap(std::size_t source, std::size_t target, Matrix m)
    : source_dim(source), target_dim(target), matrix(std::move(m)) {
  if (matrix.rows() != target_dim || matrix.cols() != source_dim) {
    throw InputError("algebra map: matrix must be " + std::to_string(target_dim) + "×" +
                     std::to_string(source_dim));
  }
}

Vector associator(const BiHomAlgebra& alg, const Vector& x, const Vector& y,
                  const Vector& z) {
  check_length(alg, x);
  check_length(alg, y);
  check_length(alg, z);
  return alg.multiply(alg.multiply(x, y), alg.beta() * z) -
         alg.multiply(alg.alpha() * x, alg.multiply(y, z));
}

AlgebraReport validate(const BiHomAlgebra& alg) {
  AlgebraReport report;
  const std::size_t n = alg.dim();
  const auto a = columns_of(alg.alpha());
  const auto b = columns_of(alg.beta());
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));

  const Matrix ab = alg.alpha() * alg.beta();
  const Matrix ba = alg.beta() * alg.alpha();
  for (std::size_t r = 0; r < n && report.commuting; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (ab(r, c) != ba(r, c)) {
        report.commuting = false;
        report.witnesses.push_back({"commuting", {r, c}});
        break;
      }
    }
  }

  auto check_multiplicative = [&](const Matrix& twist, const std::vector<Vector>& cols,
                                  const char* name) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (twist * alg.product(i, j) != alg.multiply(cols[i], cols[j])) {
          report.witnesses.push_back({name, {i, j}});
          return false;
        }
      }
    }
    return true;
  };
  report.alpha_multiplicative = check_multiplicative(alg.alpha(), a, "alpha_multiplicative");
  report.beta_multiplicative = check_multiplicative(alg.beta(), b, "beta_multiplicative");

  for (std::size_t i = 0; i < n && report.left_alternative; ++i) {
    for (std::size_t j = 0; j < n && report.left_alternative; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = associator(alg, b[i], a[j], e[k]) + associator(alg, b[j], a[i], e[k]);
        if (!is_zero(lhs)) {
          report.left_alternative = false;
          report.witnesses.push_back({"left_alternative", {i, j, k}});
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n && report.right_alternative; ++i) {
    for (std::size_t j = 0; j < n && report.right_alternative; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = associator(alg, e[i], b[j], a[k]) + associator(alg, e[i], b[k], a[j]);
        if (!is_zero(lhs)) {
          report.right_alternative = false;
          report.witnesses.push_back({"right_alternative", {i, j, k}});
          break;
        }
      }
    }
  }
  return report;
}

bool is_morphism(const AlgebraMap& f, const BiHomAlgebra& a, const BiHomAlgebra& b) {
  if (f.source_dim != a.dim() || f.target_dim != b.dim()) {
    throw InputError("morphism: map shape does not match the algebras");
  }
  if (f.matrix * a.alpha() != b.alpha() * f.matrix) return false;
  if (f.matrix * a.beta() != b.beta() * f.matrix) return false;
  const auto fc = columns_of(f.matrix);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (f.matrix * a.product(i, j) != b.multiply(fc[i], fc[j])) return false;
    }
  }
  return true;
}

BiHomAlgebra yau_twist(const BiHomAlgebra& alg, const Matrix& a2, const Matrix& b2) {
  const std::size_t n = alg.dim();
  if (a2.rows() != n || a2.cols() != n || b2.rows() != n || b2.cols() != n) {
    throw InputError("yau_twist: twist matrices must match the algebra dimension");
  }
  const auto ac = columns_of(a2);
  const auto bc = columns_of(b2);
  Multilinear mu(2, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t tuple[] = {i, j};
      mu.set_value(tuple, alg.multiply(ac[i], bc[j]));
    }
  }
  BiHomAlgebra twisted(std::move(mu), a2 * alg.alpha(), b2 * alg.beta());
  auto report = validate(twisted);
  if (!report.ok()) {
    throw ConstructionError("yau_twist: result is not a BiHom-alternative algebra",
                            std::move(report.witnesses));
  }
  return twisted;
}

BiHomAlgebra change_basis(const BiHomAlgebra& alg, const Matrix& p) {
  auto inv = p.inverse();
  if (!inv) throw PreconditionError("change_basis: singular basis matrix");
  return BiHomAlgebra(alg.mu().precompose(p).postcompose(*inv), *inv * alg.alpha() * p,
                      *inv * alg.beta() * p);
}

}  // namespace bihom
