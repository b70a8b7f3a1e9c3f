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
#include "bihom/linalg.hpp"
#include "bihom/multilinear.hpp"
#include "bihom/representation.hpp"

namespace bihom {

// In every extension the A coordinates come first, then the V coordinates.

struct CentralReport {
  bool alpha_invariant = true;  // ω(αx,αy) = ω(x,y)
  bool beta_invariant = true;   // ω(βx,βy) = ω(x,y)
  bool left_condition = true;   // ω(βx·αx, βy) = ω(αβx, αx·y), polarized in x
  bool right_condition = true;  // ω(x·βy, αβy) = ω(αx, βy·αy), polarized in y
  std::vector<Witness> witnesses;

  bool ok() const { return alpha_invariant && beta_invariant && left_condition && right_condition; }
};

/// Checks the three central-extension conditions on ω: A×A→V.
CentralReport check_central_cocycle(const BiHomAlgebra& alg, const Multilinear& omega);

/// A ⊕ V with (x+u)•(y+v) = xy + ω(x,y) and twists α⊕Id, β⊕Id. Throws
/// ConstructionError carrying the witnesses if a condition fails or the
/// result does not validate, InputError if omega is not A×A→Q^v_dim.
BiHomAlgebra central_extension(const BiHomAlgebra& alg, std::size_t v_dim,
                               const Multilinear& omega);

struct ThetaReport {
  bool phi_compatible = true;  // φθ(x,y) = θ(αx,αy)
  bool psi_compatible = true;  // ψθ(x,y) = θ(βx,βy)
  bool left_cocycle = true;
  bool right_cocycle = true;
  std::vector<Witness> witnesses;

  bool ok() const { return phi_compatible && psi_compatible && left_cocycle && right_cocycle; }
};

/// The left-cocycle expression on basis triples. It is δ²θ computed by a
/// separate code path.
Multilinear left_cocycle_residual(const BiHomAlgebra& alg, const Representation& rep,
                                  const Multilinear& theta);
/// θ(xβy, αβz) + r(αβz)θ(x,βy) − θ(αx, βy·αz) − ℓ(αx)θ(βy,αz), plus the
/// same with y and z exchanged.
Multilinear right_cocycle_residual(const BiHomAlgebra& alg, const Representation& rep,
                                   const Multilinear& theta);

ThetaReport check_theta_cocycle(const BiHomAlgebra& alg, const Representation& rep,
                                const Multilinear& theta);

/// A ⊕ V with (x+u)∘(y+v) = xy + ℓ(x)v + r(y)u + θ(x,y) and twists α⊕φ, β⊕ψ,
/// without any check.
BiHomAlgebra t_theta_product(const BiHomAlgebra& alg, const Representation& rep,
                             const Multilinear& theta);

/// t_theta_product after checking the cocycle conditions. Throws
/// PreconditionError when alg or rep is invalid, ConstructionError naming
/// the failed condition otherwise.
BiHomAlgebra t_theta_extension(const BiHomAlgebra& alg, const Representation& rep,
                               const Multilinear& theta);

/// t_theta_extension over the dual representation: the product is
/// xy + r⋆(x)g + ℓ⋆(y)f + θ(x,y) on A ⊕ V*.
BiHomAlgebra t_star_theta_extension(const BiHomAlgebra& alg, const RegularRepresentation& reg,
                                    const Multilinear& theta_star);

/// {a : a·e_i = e_i·a = 0 for every i}.
Subspace annihilator(const BiHomAlgebra& alg);

}  // namespace bihom
