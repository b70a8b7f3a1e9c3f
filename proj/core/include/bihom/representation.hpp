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

#include "bihom/algebra.hpp"
#include "bihom/errors.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// A bimodule (V, ℓ, r, φ, ψ): l()[i] = ℓ(e_i), r()[i] = r(e_i), each
/// mod_dim × mod_dim. The constructor checks shapes only.
class Representation {
 public:
  Representation() = default;
  Representation(std::vector<Matrix> l, std::vector<Matrix> r, Matrix phi, Matrix psi);

  std::size_t alg_dim() const { return l_.size(); }
  std::size_t mod_dim() const { return phi_.rows(); }
  const std::vector<Matrix>& l() const { return l_; }
  const std::vector<Matrix>& r() const { return r_; }
  const Matrix& phi() const { return phi_; }
  const Matrix& psi() const { return psi_; }

  /// ℓ(x) = Σ x_i ℓ(e_i).
  Matrix left(const Vector& x) const;
  /// r(x) = Σ x_i r(e_i).
  Matrix right(const Vector& x) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::vector<Matrix> l_;
  std::vector<Matrix> r_;
  Matrix phi_;
  Matrix psi_;
};

struct RepresentationReport {
  bool commuting = true;   // φψ = ψφ
  bool phi_left = true;    // φℓ(x) = ℓ(αx)φ
  bool phi_right = true;   // φr(x) = r(αx)φ
  bool psi_left = true;    // ψℓ(x) = ℓ(βx)ψ
  bool psi_right = true;   // ψr(x) = r(βx)ψ
  bool rep1 = true;
  bool rep2 = true;
  bool rep3 = true;
  bool rep4 = true;
  std::vector<Witness> witnesses;

  bool ok() const {
    return commuting && phi_left && phi_right && psi_left && psi_right && rep1 && rep2 &&
           rep3 && rep4;
  }
};

/// Checks every bimodule axiom on basis elements and basis pairs. The
/// axioms quadratic in one argument are checked in polarized form.
/// Throws InputError on a shape mismatch.
RepresentationReport validate_representation(const BiHomAlgebra& alg,
                                             const Representation& rep);

/// ℓ = left multiplication, r = right multiplication, φ = α, ψ = β.
Representation adjoint(const BiHomAlgebra& alg);

/// ℓ = r = 0 with the given commuting twists.
Representation trivial_representation(std::size_t alg_dim, Matrix phi, Matrix psi);

/// (V ⊕ W, ℓ ⊕ ℓ', r ⊕ r', φ ⊕ φ', ψ ⊕ ψ').
Representation direct_sum(const Representation& a, const Representation& b);

/// The isomorphic representation in the module basis given by the columns
/// of p. Throws PreconditionError if p is singular.
Representation change_basis(const Representation& rep, const Matrix& p);

/// A ⊕ V with (x1+v1)(x2+v2) = x1x2 + ℓ(x1)v2 + r(x2)v1 and twists α⊕φ, β⊕ψ.
/// No validity check: the result is a BiHom-alternative algebra exactly when
/// rep is a representation.
BiHomAlgebra semidirect(const BiHomAlgebra& alg, const Representation& rep);

/// A representation with all four twists invertible, carrying the inverses.
class RegularRepresentation {
 public:
  /// Throws PreconditionError when α, β, φ or ψ is singular.
  RegularRepresentation(const BiHomAlgebra& alg, Representation rep);

  const Representation& inner() const { return inner_; }
  const Matrix& alpha_inv() const { return alpha_inv_; }
  const Matrix& beta_inv() const { return beta_inv_; }
  const Matrix& phi_inv() const { return phi_inv_; }
  const Matrix& psi_inv() const { return psi_inv_; }

 private:
  Representation inner_;
  Matrix alpha_inv_;
  Matrix beta_inv_;
  Matrix phi_inv_;
  Matrix psi_inv_;
};

// Dual-space conventions: V* carries the dual basis, the matrix of f* is the
// transpose of the matrix of f, and ⟨ξ, u⟩ is the coordinate dot product.

/// ℓ⋆(e_i) from the pairing ⟨ℓ⋆(x)ξ, u⟩ = ⟨ξ, ℓ(α⁻²β x) φ⁻¹ψ⁻¹ u⟩.
std::vector<Matrix> left_star(const RegularRepresentation& reg, const BiHomAlgebra& alg);
/// r⋆(e_i) from the pairing ⟨r⋆(x)ξ, u⟩ = ⟨ξ, r(αβ⁻² x) φ⁻¹ψ⁻¹ u⟩.
std::vector<Matrix> right_star(const RegularRepresentation& reg, const BiHomAlgebra& alg);

/// ℓ⋆(x) = ℓ*(α⁻¹β² x) ∘ (φ⁻¹ψ⁻¹)*, the composed-transpose form. Agrees with
/// left_star() whenever the twist-intertwining relations hold.
std::vector<Matrix> left_star_composed(const RegularRepresentation& reg,
                                       const BiHomAlgebra& alg);
/// r⋆(x) = r*(α²β⁻¹ x) ∘ (φ⁻¹ψ⁻¹)*.
std::vector<Matrix> right_star_composed(const RegularRepresentation& reg,
                                        const BiHomAlgebra& alg);

/// (V*, r⋆, ℓ⋆, (φ⁻¹)*, (ψ⁻¹)*): left action r⋆, right action ℓ⋆.
Representation dual(const RegularRepresentation& reg, const BiHomAlgebra& alg);

/// dual(adjoint(alg)). Throws PreconditionError if α or β is singular.
Representation coadjoint(const BiHomAlgebra& alg);

/// (ℓ⋆)⋆: the left star construction applied to ℓ⋆ on V* (with twists
/// (φ⁻¹)*, (ψ⁻¹)*), read back on V** = V. Equals ℓ∘α⁻³β³.
std::vector<Matrix> left_star_star(const RegularRepresentation& reg, const BiHomAlgebra& alg);
/// (r⋆)⋆, equal to r∘α³β⁻³.
std::vector<Matrix> right_star_star(const RegularRepresentation& reg, const BiHomAlgebra& alg);

}  // namespace bihom
