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
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/errors.hpp"
#include "bihom/matrix.hpp"
#include "bihom/multilinear.hpp"

namespace bihom {

/// d_t = μ + Σ_{i=1}^{m} d_i tⁱ modulo t^{m+1}. The twists are not deformed.
struct TruncatedDeformation {
  BiHomAlgebra alg;
  std::vector<Multilinear> terms;  // d_1, ..., d_m

  std::size_t order() const { return terms.size(); }
  /// d_0 = μ for i = 0, zero past the stored order.
  Multilinear term(std::size_t i) const;
};

/// φ_t = Id + Σ_{i=1}^{m} φ_i tⁱ.
struct FormalIsomorphism {
  std::vector<Matrix> terms;  // φ_1, ..., φ_m

  std::size_t order() const { return terms.size(); }
  /// φ_0 = Id for i = 0, zero past the stored order.
  Matrix term(std::size_t i, std::size_t dim) const;
};

struct DeformationReport {
  /// orders[k] is whether Σ_{i=0}^{k} d_i ⋄ d_{k−i} vanishes.
  std::vector<bool> orders;
  /// First failing basis triple per failing order, named "order_k".
  std::vector<Witness> witnesses;

  bool ok() const;
  /// All orders 0..k pass.
  bool ok_through(std::size_t k) const;
};

/// Checks the order-k conditions for k = 0..order(). Throws PreconditionError
/// naming the term and basis pair when some d_i does not commute with α or β,
/// and InputError on shape mismatches.
DeformationReport check_deformation(const TruncatedDeformation& defm);

/// a(b(βx,αy),βz) − a(αβx,b(αy,z)) + a(b(βy,αx),βz) − a(αβy,b(αx,z)).
Multilinear diamond(const BiHomAlgebra& alg, const Multilinear& a, const Multilinear& b);

/// Σ_{i=1}^{m−1} d_i ⋄ d_{m−i}. Requires m ≤ order() + 1 and validity
/// through order m − 1 (PreconditionError otherwise).
Multilinear obstruction(const TruncatedDeformation& defm, std::size_t m);

/// A term d_m, m = order() + 1, making the deformation valid to order m:
/// a particular solution of δ²d_m = −obstruction(defm, m) over the
/// compatible 2-cochains, or nullopt when none exists.
std::optional<Multilinear> extend_one_order(const TruncatedDeformation& defm);

/// Whether φ_t∘d_t(x,y) = d'_t(φ_t x, φ_t y) modulo t^{m+1} and every φ_i
/// commutes with α and β. Missing terms count as zero.
bool check_equivalence(const TruncatedDeformation& d, const TruncatedDeformation& d_prime,
                       const FormalIsomorphism& phi, std::size_t m);

/// φ_t⁻¹ ∘ d_t(φ_t x, φ_t y) truncated at order m, so that
/// check_equivalence(gauge(d, φ, m), d, φ, m) holds.
TruncatedDeformation gauge(const TruncatedDeformation& defm, const FormalIsomorphism& phi,
                           std::size_t m);

/// φ_t ∘ ψ_t truncated at order m.
FormalIsomorphism compose(const FormalIsomorphism& phi, const FormalIsomorphism& psi,
                          std::size_t dim, std::size_t m);

struct TrivializeResult {
  /// Ψ with check_equivalence(null deformation, defm, Ψ, M); empty on failure.
  std::optional<FormalIsomorphism> isomorphism;
  /// The first order whose leading term is not a coboundary.
  std::optional<std::size_t> failed_order;
  /// The deformation after all successful gauge steps.
  TruncatedDeformation residual;
};

/// Repeatedly removes the lowest nonzero term d_n = δ¹f_n with the gauge
/// Id − tⁿf_n. Requires validity through max_order with missing terms read
/// as zero (PreconditionError otherwise).
TrivializeResult trivialize(const TruncatedDeformation& defm, std::size_t max_order);

}  // namespace bihom
