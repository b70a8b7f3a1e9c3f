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
#include <string>
#include <string_view>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/linalg.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

enum class OperatorKind { U, Der, QDer, GDer, SGDer, Centroid, QuasiCentroid };

std::string to_string(OperatorKind kind);
/// Accepts the CLI names u, der, qder, gder, sgder, cent, qcent.
OperatorKind parse_operator_kind(std::string_view name);

/// τ = α^k β^l. Negative exponents need the matching twist to be invertible.
struct TwistExponents {
  int k = 0;
  int l = 0;

  friend bool operator==(const TwistExponents&, const TwistExponents&) = default;
};

/// A subspace of End(A) given by matrices.
///
/// For QDer, witnesses[i] = {D'} for basis[i]; for GDer and SGDer,
/// witnesses[i] = {D', D''}. Empty for the other kinds.
struct OperatorSpace {
  OperatorKind kind = OperatorKind::U;
  std::optional<TwistExponents> exponents;
  std::size_t alg_dim = 0;
  std::vector<Matrix> basis;
  std::vector<std::vector<Matrix>> witnesses;

  std::size_t dim() const { return basis.size(); }
  /// The span inside End(A), in row-major matrix coordinates.
  Subspace as_subspace() const;
  bool contains(const Matrix& m) const;
};

/// {u : uα = αu, uβ = βu}.
OperatorSpace commutant_U(const BiHomAlgebra& alg);

OperatorSpace derivation_space(const BiHomAlgebra& alg, TwistExponents e);
OperatorSpace quasi_derivation_space(const BiHomAlgebra& alg, TwistExponents e);
OperatorSpace generalized_derivation_space(const BiHomAlgebra& alg, TwistExponents e);
OperatorSpace sgder_space(const BiHomAlgebra& alg, TwistExponents e);
OperatorSpace centroid_space(const BiHomAlgebra& alg, TwistExponents e);
OperatorSpace quasi_centroid_space(const BiHomAlgebra& alg, TwistExponents e);

/// Dispatches on kind. U ignores the exponents.
OperatorSpace operator_space(const BiHomAlgebra& alg, OperatorKind kind, TwistExponents e);

// Pointwise predicates with explicit witnesses. Each also requires every
// map involved to commute with α and β.

bool is_derivation(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d);
/// D'(xy) = D(x)τ(y) + τ(x)D(y).
bool is_quasi_derivation(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d,
                         const Matrix& d1);
/// D''(xy) = D(x)τ(y) + τ(x)D'(y).
bool is_generalized_derivation(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d,
                               const Matrix& d1, const Matrix& d2);
/// Both orderings: D''(xy) = D(x)τ(y) + τ(x)D'(y) = D'(x)τ(y) + τ(x)D(y).
bool is_symmetric_generalized_derivation(const BiHomAlgebra& alg, TwistExponents e,
                                         const Matrix& d, const Matrix& d1,
                                         const Matrix& d2);
bool is_centroid(const BiHomAlgebra& alg, TwistExponents e, const Matrix& theta);
bool is_quasi_centroid(const BiHomAlgebra& alg, TwistExponents e, const Matrix& theta);

/// u∘v − v∘u. Throws InputError on a shape mismatch.
Matrix bracket(const Matrix& u, const Matrix& v);
/// α̃(u) = α∘u.
Matrix alpha_shift(const BiHomAlgebra& alg, const Matrix& u);
/// β̃(u) = β∘u.
Matrix beta_shift(const BiHomAlgebra& alg, const Matrix& u);

struct SgderDecomposition {
  Matrix q;        // (D + D')/2 ∈ QDer
  Matrix c;        // (D − D')/2 ∈ QC
  Matrix witness;  // the D' used
};

/// Splits D ∈ SGDer as q + c. Finds a witness D' by solving; throws
/// PreconditionError when D is not in SGDer.
SgderDecomposition sgder_decompose(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d);
/// As above with the given witness D'. Throws PreconditionError when no D''
/// makes (D, D') symmetric.
SgderDecomposition sgder_decompose(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d,
                                   const Matrix& d_prime);

}  // namespace bihom
