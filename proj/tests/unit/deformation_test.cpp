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
#include <gtest/gtest.h>

#include "bihom/cohomology.hpp"
#include "bihom/corpus.hpp"
#include "bihom/deformation.hpp"
#include "bihom/errors.hpp"
#include "bihom_test/support.hpp"

namespace bihom {
namespace {

using test::Rng;

Multilinear scalar_term(const Rational& c) {
  Multilinear f(2, 1, 1);
  f.at({0, 0}, 0) = c;
  return f;
}

TEST(Deformation, NullDeformationPasses) {
  for (const auto& [name, alg] : test::small_corpus()) {
    const DeformationReport r = check_deformation({alg, {}});
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.orders.size(), 1u) << name;
  }
}

TEST(Deformation, E1HandExamples) {
  const BiHomAlgebra e1 = corpus::idempotent_line();
  EXPECT_TRUE(check_deformation({e1, {scalar_term(1)}}).ok());
  EXPECT_TRUE(check_deformation({e1, {scalar_term(1), scalar_term(0)}}).ok());
  EXPECT_TRUE(diamond(e1, scalar_term(1), scalar_term(1)).is_zero());
  const TruncatedDeformation d{e1, {scalar_term(1)}};
  EXPECT_TRUE(obstruction(d, 1).is_zero());
  EXPECT_TRUE(obstruction(d, 2).is_zero());
  const auto next = extend_one_order(d);
  ASSERT_TRUE(next);
  EXPECT_TRUE(delta2(e1, adjoint(e1), *next).is_zero());
}

TEST(Deformation, ZeroLineExtends) {
  const BiHomAlgebra zl = corpus::zero_line();
  const TruncatedDeformation d{zl, {scalar_term(1)}};
  EXPECT_TRUE(obstruction(d, 2).is_zero());
  EXPECT_TRUE(extend_one_order(d).has_value());
}

TEST(Deformation, ObstructionArgumentChecks) {
  const BiHomAlgebra e1 = corpus::idempotent_line();
  const TruncatedDeformation d{e1, {scalar_term(1)}};
  EXPECT_THROW(obstruction(d, 0), InputError);
  EXPECT_THROW(obstruction(d, 3), InputError);
}

TEST(Deformation, IncompatibleTermIsPrecondition) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  Multilinear bad(2, 2, 2);
  bad.at({0, 0}, 1) = 1;
  EXPECT_THROW(check_deformation({d2, {bad}}), PreconditionError);
}

TEST(Deformation, DiamondWithMuIsDelta2) {
  Rng rng(41);
  for (const auto& [name, alg] : test::small_corpus()) {
    const Representation adj = adjoint(alg);
    for (int trial = 0; trial < 5; ++trial) {
      const Multilinear d = test::random_cochain(alg, adj, 2, rng);
      EXPECT_EQ(diamond(alg, alg.mu(), d) + diamond(alg, d, alg.mu()), delta2(alg, adj, d))
          << name;
    }
  }
}

TEST(Deformation, OrderOneConditionIsCocycleCondition) {
  Rng rng(42);
  int non_cocycles = 0;
  for (const auto& [name, alg] : test::small_corpus()) {
    const Representation adj = adjoint(alg);
    for (int trial = 0; trial < 10; ++trial) {
      const Multilinear d1 = test::random_cochain(alg, adj, 2, rng);
      const bool cocycle = delta2(alg, adj, d1).is_zero();
      non_cocycles += cocycle ? 0 : 1;
      EXPECT_EQ(check_deformation({alg, {d1}}).ok_through(1), cocycle) << name;
    }
  }
  EXPECT_GT(non_cocycles, 0);
}

TEST(Deformation, FirstNonzeroTermIsCocycle) {
  Rng rng(43);
  for (const auto& [name, alg] : test::small_corpus()) {
    const Representation adj = adjoint(alg);
    const std::size_t n = alg.dim();
    const Multilinear dp = test::random_cocycle(alg, adj, 2, rng);
    const TruncatedDeformation d{alg, {Multilinear(2, n, n), Multilinear(2, n, n), dp}};
    ASSERT_TRUE(check_deformation(d).ok()) << name;
    EXPECT_TRUE(delta2(alg, adj, dp).is_zero()) << name;
  }
}

TEST(Deformation, ObstructionsAreCocycles) {
  Rng rng(44);
  for (const auto& [name, alg] : test::small_corpus()) {
    const Representation adj = adjoint(alg);
    for (int trial = 0; trial < 3; ++trial) {
      const TruncatedDeformation d = test::random_deformation(alg, 3, rng);
      for (std::size_t m = 2; m <= d.order() + 1; ++m) {
        EXPECT_TRUE(delta3(alg, adj, obstruction(d, m)).is_zero()) << name << " m=" << m;
      }
    }
  }
}

TEST(Deformation, ExtensionIsValidAndInvariantUnderCocycles) {
  Rng rng(45);
  for (const auto& [name, alg] : test::small_corpus()) {
    const Representation adj = adjoint(alg);
    TruncatedDeformation d = test::random_deformation(alg, 2, rng);
    const auto next = extend_one_order(d);
    if (!next) continue;
    d.terms.push_back(*next + test::random_cocycle(alg, adj, 2, rng));
    EXPECT_TRUE(check_deformation(d).ok()) << name;
  }
}

TEST(Equivalence, HandExampleOnE1) {
  const BiHomAlgebra e1 = corpus::idempotent_line();
  const TruncatedDeformation d{e1, {scalar_term(1)}};
  const TruncatedDeformation d_prime{e1, {scalar_term(0)}};
  EXPECT_TRUE(check_equivalence(d, d_prime, {{Matrix::identity(1)}}, 1));
  EXPECT_TRUE(check_equivalence(d, d, {}, 1));
  EXPECT_FALSE(check_equivalence(d, d_prime, {}, 1));
}

TEST(Equivalence, GaugeIsEquivalentAndCohomologous) {
  Rng rng(46);
  for (const auto& [name, alg] : test::small_corpus()) {
    const Representation adj = adjoint(alg);
    const Subspace b2 = coboundaries(alg, adj, 2);
    for (int trial = 0; trial < 3; ++trial) {
      const TruncatedDeformation d = test::random_deformation(alg, 3, rng);
      const FormalIsomorphism phi{{test::random_commuting_matrix(alg, rng),
                                   test::random_commuting_matrix(alg, rng)}};
      const TruncatedDeformation g = gauge(d, phi, d.order());
      EXPECT_TRUE(check_equivalence(g, d, phi, d.order())) << name;
      EXPECT_TRUE(check_deformation(g).ok()) << name;
      EXPECT_TRUE(b2.contains((d.term(1) - g.term(1)).coordinates())) << name;
    }
  }
}

TEST(Equivalence, NonCommutingIsomorphismIsRejected) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  Matrix off(2, 2);
  off(0, 1) = 1;
  const TruncatedDeformation d{d2, {}};
  EXPECT_FALSE(check_equivalence(d, d, {{off}}, 1));
  EXPECT_THROW(check_equivalence(d, d, {{Matrix::identity(3)}}, 1), InputError);
}

TEST(Equivalence, ComposeMultipliesSeries) {
  Rng rng(47);
  const BiHomAlgebra z1 = corpus::zero_plane();
  const FormalIsomorphism a{{rng.matrix(2, 2), rng.matrix(2, 2)}};
  const FormalIsomorphism b{{rng.matrix(2, 2)}};
  const FormalIsomorphism c = compose(a, b, 2, 3);
  EXPECT_EQ(c.term(1, 2), a.term(1, 2) + b.term(1, 2));
  EXPECT_EQ(c.term(2, 2), a.term(2, 2) + a.term(1, 2) * b.term(1, 2));
  EXPECT_EQ(c.term(3, 2), a.term(2, 2) * b.term(1, 2));
}

TEST(Trivialize, NullDeformationGivesIdentity) {
  const BiHomAlgebra e1 = corpus::idempotent_line();
  const TrivializeResult r = trivialize({e1, {}}, 3);
  ASSERT_TRUE(r.isomorphism);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_TRUE(r.isomorphism->term(i, 1).is_zero());
}

TEST(Trivialize, E1IsRigid) {
  Rng rng(48);
  const BiHomAlgebra e1 = corpus::idempotent_line();
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedDeformation d = test::random_deformation(e1, 5, rng);
    ASSERT_EQ(d.order(), 5u);
    const TrivializeResult r = trivialize(d, 5);
    ASSERT_TRUE(r.isomorphism);
    EXPECT_TRUE(check_equivalence({e1, {}}, d, *r.isomorphism, 5));
    const TruncatedDeformation g = gauge(d, *r.isomorphism, 5);
    for (std::size_t i = 1; i <= 5; ++i) EXPECT_TRUE(g.term(i).is_zero()) << i;
    for (const auto& t : r.residual.terms) EXPECT_TRUE(t.is_zero());
  }
}

TEST(Trivialize, ZeroLineFailsAtOrderOne) {
  const BiHomAlgebra zl = corpus::zero_line();
  const TrivializeResult r = trivialize({zl, {scalar_term(1)}}, 3);
  EXPECT_FALSE(r.isomorphism);
  ASSERT_TRUE(r.failed_order);
  EXPECT_EQ(*r.failed_order, 1u);
}

TEST(Trivialize, InvalidDeformationIsPrecondition) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  Rng rng(49);
  Multilinear d1;
  do {
    d1 = test::random_cochain(d2, adjoint(d2), 2, rng);
  } while (delta2(d2, adjoint(d2), d1).is_zero());
  EXPECT_THROW(trivialize({d2, {d1}}, 2), PreconditionError);
}

}  // namespace
}  // namespace bihom
