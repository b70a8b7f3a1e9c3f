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
#include <vector>

#include "bihom/errors.hpp"
#include "bihom/matrix.hpp"
#include "bihom/multilinear.hpp"

namespace bihom {

/// A finite-dimensional BiHom-algebra (A, μ, α, β) in structure constants.
///
/// mu().at({i, j}, k) is the e_k coefficient of e_i·e_j. The constructor
/// checks shapes only; the defining identities are checked by validate().
class BiHomAlgebra {
 public:
  BiHomAlgebra() = default;
  BiHomAlgebra(Multilinear mu, Matrix alpha, Matrix beta);

  std::size_t dim() const { return mu_.in_dim(); }
  const Multilinear& mu() const { return mu_; }
  const Matrix& alpha() const { return alpha_; }
  const Matrix& beta() const { return beta_; }

  Vector multiply(const Vector& x, const Vector& y) const;
  /// e_i · e_j.
  Vector product(std::size_t i, std::size_t j) const { return mu_.value({i, j}); }

  /// Matrix of y ↦ x·y.
  Matrix left_multiplication(const Vector& x) const;
  /// Matrix of x ↦ x·y.
  Matrix right_multiplication(const Vector& y) const;

  /// α^k β^l; negative exponents throw PreconditionError for singular twists.
  Matrix twist_power(int k, int l) const;
  bool is_regular() const;

  friend bool operator==(const BiHomAlgebra&, const BiHomAlgebra&) = default;

 private:
  Multilinear mu_;
  Matrix alpha_;
  Matrix beta_;
};

/// A linear map between algebras of the given dimensions.
struct AlgebraMap {
  AlgebraMap(std::size_t source_dim, std::size_t target_dim, Matrix matrix);

  std::size_t source_dim;
  std::size_t target_dim;
  Matrix matrix;  // target_dim × source_dim
};

/// (x·y)·β(z) − α(x)·(y·z).
Vector associator(const BiHomAlgebra& alg, const Vector& x, const Vector& y,
                  const Vector& z);

struct AlgebraReport {
  bool commuting = true;
  bool alpha_multiplicative = true;
  bool beta_multiplicative = true;
  bool left_alternative = true;
  bool right_alternative = true;
  /// First failing tuple for every identity that failed.
  std::vector<Witness> witnesses;

  /// Both identities and all structural conditions.
  bool ok() const {
    return commuting && alpha_multiplicative && beta_multiplicative &&
           left_alternative && right_alternative;
  }
  /// The left BiHom-alternative algebra conditions (cohomology, deformations).
  bool left_ok() const {
    return commuting && alpha_multiplicative && beta_multiplicative && left_alternative;
  }
};

/// Checks αβ = βα, multiplicativity of α and β, and the left and right
/// BiHom-alternative identities in polarized form on all basis triples.
AlgebraReport validate(const BiHomAlgebra& alg);

/// f∘μ_a = μ_b∘(f⊗f), f∘α_a = α_b∘f, f∘β_a = β_b∘f.
bool is_morphism(const AlgebraMap& f, const BiHomAlgebra& a, const BiHomAlgebra& b);

/// Product μ(a2 x, b2 y) with twists a2∘α and b2∘β. Throws
/// ConstructionError carrying the validate() witnesses if the result is not
/// a BiHom-alternative algebra.
BiHomAlgebra yau_twist(const BiHomAlgebra& alg, const Matrix& a2, const Matrix& b2);

/// The isomorphic algebra in the basis given by the columns of p
/// (new coordinates x' = p⁻¹ x). Throws PreconditionError if p is singular.
BiHomAlgebra change_basis(const BiHomAlgebra& alg, const Matrix& p);

}  // namespace bihom
