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

#include "bihom/algebra.hpp"
#include "bihom/linalg.hpp"
#include "bihom/multilinear.hpp"
#include "bihom/representation.hpp"

namespace bihom {

// An n-cochain is a Multilinear of arity n, in_dim = alg.dim(), out_dim =
// rep.mod_dim(), subject to φ∘f = f∘α^⊗n and ψ∘f = f∘β^⊗n. The complex is
// C¹ → C² → C³ → C⁴ and every higher differential is zero.

struct ComplexReport {
  int degree = 0;
  std::size_t dim_C = 0;
  std::size_t dim_Z = 0;
  std::size_t dim_B = 0;
  std::size_t dim_H = 0;
};

/// Basis of Cⁿ inside the full coordinate space of n-linear maps, n in 1..4.
Subspace cochain_basis(const BiHomAlgebra& alg, const Representation& rep, int n);

/// Whether f has cochain shape and satisfies both twist compatibilities.
bool is_cochain(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f);

/// The differential on an arbitrary multilinear map of arity 1..3, with no
/// compatibility check. Arity ≥ 4 maps to the zero map.
Multilinear coboundary(const BiHomAlgebra& alg, const Representation& rep,
                       const Multilinear& f);

/// (δ¹f)(x,y) = ℓ(x)f(y) + r(y)f(x) − f(xy).
Multilinear delta1(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f);
/// The eight-term differential on 2-cochains.
Multilinear delta2(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f);
/// The ten-term differential on 3-cochains.
Multilinear delta3(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f);

/// Matrix of δⁿ between the full coordinate spaces of n- and (n+1)-linear
/// maps, n in 1..3.
Matrix coboundary_matrix(const BiHomAlgebra& alg, const Representation& rep, int n);

/// Zⁿ = ker δⁿ ∩ Cⁿ, n in 1..3.
Subspace cocycles(const BiHomAlgebra& alg, const Representation& rep, int n);
/// Bⁿ = δⁿ⁻¹(Cⁿ⁻¹), n in 2..4.
Subspace coboundaries(const BiHomAlgebra& alg, const Representation& rep, int n);

/// dim Cⁿ, Zⁿ, Bⁿ, Hⁿ for n ∈ {2, 3}. Requires a left BiHom-alternative
/// algebra and a valid representation (PreconditionError otherwise).
ComplexReport complex_report(const BiHomAlgebra& alg, const Representation& rep, int n);

}  // namespace bihom
