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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/deformation.hpp"
#include "bihom/genderiv.hpp"
#include "bihom/linalg.hpp"
#include "bihom/matrix.hpp"
#include "bihom/multilinear.hpp"
#include "bihom/representation.hpp"

namespace bihom::test {

/// Seeded source of small rationals and random structured objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi);
  /// Numerator in [-3, 3], denominator in {1, 2, 3}.
  Rational rational();
  Rational nonzero_rational();
  Vector vector(std::size_t n);
  Matrix matrix(std::size_t rows, std::size_t cols);
  /// Unipotent-times-diagonal, hence invertible.
  Matrix invertible(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

struct NamedAlgebra {
  std::string name;
  BiHomAlgebra alg;
};

/// Z1, zero line, E1, dual numbers, D2.
std::vector<NamedAlgebra> small_corpus();
/// small_corpus() plus semidirect(D2, adjoint), a central extension of E1
/// and a T_theta extension of E1.
std::vector<NamedAlgebra> extended_corpus();

/// A random valid representation of alg with module dimension at most
/// max_mod_dim: trivial modules with commuting twists, the adjoint, the
/// coadjoint, direct sums of these and base changes. Every result is checked
/// with validate_representation.
Representation random_representation(const BiHomAlgebra& alg, Rng& rng,
                                     std::size_t max_mod_dim = 4);

/// Random element of span(space.basis()).
Vector random_element(const Subspace& space, Rng& rng);
/// Random n-cochain, n in 1..4.
Multilinear random_cochain(const BiHomAlgebra& alg, const Representation& rep, int n, Rng& rng);
/// Random n-cocycle, n in 1..3.
Multilinear random_cocycle(const BiHomAlgebra& alg, const Representation& rep, int n, Rng& rng);

/// Coordinates reshaped as an arity-n multilinear map.
Multilinear as_multilinear(const Vector& coords, int arity, std::size_t in_dim,
                           std::size_t out_dim);

/// A random deformation valid through max_order: random d_1 in Z², then
/// each higher term is a particular extension plus a random cocycle. Returns
/// a shorter deformation if an obstruction is hit.
TruncatedDeformation random_deformation(const BiHomAlgebra& alg, std::size_t max_order,
                                        Rng& rng);

/// Random element of the commutant of α and β.
Matrix random_commuting_matrix(const BiHomAlgebra& alg, Rng& rng);

// Oracles computed straight from the defining formulas, evaluated on basis
// vectors with no shared code with the library's assembly.

Multilinear naive_delta1(const BiHomAlgebra& alg, const Representation& rep,
                         const Multilinear& f);
Multilinear naive_delta2(const BiHomAlgebra& alg, const Representation& rep,
                         const Multilinear& f);
Multilinear naive_delta3(const BiHomAlgebra& alg, const Representation& rep,
                         const Multilinear& f);

/// dim C, Z, B, H in degree n (2 or 3) from full linear systems assembled
/// with matrix_of over the naive differentials.
ComplexReport naive_complex_report(const BiHomAlgebra& alg, const Representation& rep, int n);

/// Dimension of an operator space by one stacked system over tuples
/// (D, D', D''), projected to the first block.
std::size_t naive_operator_dim(const BiHomAlgebra& alg, OperatorKind kind, TwistExponents e);

}  // namespace bihom::test
