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

#include "bihom/corpus.hpp"
#include "bihom/errors.hpp"
#include "bihom/representation.hpp"
#include "bihom_test/support.hpp"

namespace bihom {
namespace {

using test::Rng;

Representation perturbed_adjoint_e1() {
  const Representation adj = adjoint(corpus::idempotent_line());
  return Representation(adj.l(), {2 * Matrix::identity(1)}, adj.phi(), adj.psi());
}

bool invertible_twists(const Representation& rep) {
  return rep.phi().inverse().has_value() && rep.psi().inverse().has_value();
}

std::vector<Matrix> act_through(const std::vector<Matrix>& action, const Matrix& t) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < action.size(); ++i) {
    Matrix acc(action[i].rows(), action[i].cols());
    const Vector image = t.column(i);
    for (std::size_t j = 0; j < action.size(); ++j) acc += image[j] * action[j];
    out.push_back(acc);
  }
  return out;
}

TEST(Representation, TrivialOverZ1IsValid) {
  EXPECT_TRUE(validate_representation(
                  corpus::zero_plane(),
                  trivial_representation(2, Matrix::identity(3), Matrix::identity(3)))
                  .ok());
}

TEST(Representation, AdjointOfCorpusIsValid) {
  for (const auto& [name, alg] : test::extended_corpus()) {
    EXPECT_TRUE(validate_representation(alg, adjoint(alg)).ok()) << name;
  }
}

TEST(Representation, PerturbedAdjointFailsRep3) {
  const RepresentationReport r =
      validate_representation(corpus::idempotent_line(), perturbed_adjoint_e1());
  EXPECT_FALSE(r.rep3);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(Representation, ShapeMismatchIsInputError) {
  EXPECT_THROW(validate_representation(corpus::zero_plane(),
                                       adjoint(corpus::idempotent_line())),
               InputError);
  EXPECT_THROW(Representation({Matrix::identity(2)}, {Matrix::identity(1)},
                              Matrix::identity(2), Matrix::identity(2)),
               InputError);
}

TEST(Representation, SemidirectExamples) {
  const BiHomAlgebra e1 = corpus::idempotent_line();
  const BiHomAlgebra sd = semidirect(e1, adjoint(e1));
  EXPECT_EQ(sd.dim(), 2u);
  EXPECT_TRUE(validate(sd).ok());
  EXPECT_FALSE(validate(semidirect(e1, perturbed_adjoint_e1())).ok());
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  EXPECT_TRUE(validate(semidirect(d2, trivial_representation(2, Matrix::identity(1),
                                                             Matrix::identity(1))))
                  .ok());
  EXPECT_TRUE(validate(semidirect(e1, coadjoint(e1))).ok());
}

TEST(Representation, SemidirectIffOnRandomModules) {
  Rng rng(21);
  int invalid = 0;
  for (const auto& [name, alg] : test::small_corpus()) {
    for (int trial = 0; trial < 8; ++trial) {
      const Representation rep = test::random_representation(alg, rng, 3);
      EXPECT_TRUE(validate(semidirect(alg, rep)).ok()) << name;
      // Perturb one entry of one structure map.
      std::vector<Matrix> l = rep.l(), r = rep.r();
      Matrix phi = rep.phi(), psi = rep.psi();
      const std::size_t m = rep.mod_dim();
      const std::size_t row = rng.integer(0, static_cast<int>(m) - 1);
      const std::size_t col = rng.integer(0, static_cast<int>(m) - 1);
      const std::size_t which = rng.integer(0, 3);
      const std::size_t slot = rng.integer(0, static_cast<int>(alg.dim()) - 1);
      Matrix& target = which == 0 ? l[slot] : which == 1 ? r[slot] : which == 2 ? phi : psi;
      target(row, col) += rng.nonzero_rational();
      const Representation bad(l, r, phi, psi);
      const bool rep_ok = validate_representation(alg, bad).ok();
      invalid += rep_ok ? 0 : 1;
      EXPECT_EQ(rep_ok, validate(semidirect(alg, bad)).ok()) << name << " trial " << trial;
    }
  }
  EXPECT_GT(invalid, 0);
}

TEST(Representation, DirectSumAndChangeBasisPreserveValidity) {
  Rng rng(22);
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  const Representation sum = direct_sum(adjoint(d2), coadjoint(d2));
  EXPECT_EQ(sum.mod_dim(), 4u);
  EXPECT_TRUE(validate_representation(d2, sum).ok());
  EXPECT_TRUE(validate_representation(d2, change_basis(sum, rng.invertible(4))).ok());
  EXPECT_THROW(change_basis(sum, Matrix(4, 4)), PreconditionError);
}

TEST(Representation, DualOfAdjointE1IsAllOnes) {
  const BiHomAlgebra e1 = corpus::idempotent_line();
  const Representation d = dual(RegularRepresentation(e1, adjoint(e1)), e1);
  const Matrix one = Matrix::identity(1);
  EXPECT_EQ(d.l()[0], one);
  EXPECT_EQ(d.r()[0], one);
  EXPECT_EQ(d.phi(), one);
  EXPECT_EQ(d.psi(), one);
  EXPECT_TRUE(validate_representation(e1, d).ok());
}

TEST(Representation, DualOfRandomRegularModulesIsValid) {
  Rng rng(23);
  int tested = 0;
  for (const auto& [name, alg] : test::small_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      const Representation rep = test::random_representation(alg, rng, 3);
      if (!invertible_twists(rep)) continue;
      ++tested;
      const RegularRepresentation reg(alg, rep);
      EXPECT_TRUE(validate_representation(alg, dual(reg, alg)).ok()) << name;
    }
  }
  EXPECT_GT(tested, 10);
}

TEST(Representation, SingularTwistIsPrecondition) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  EXPECT_THROW(RegularRepresentation(d2, trivial_representation(2, Matrix(1, 1),
                                                                Matrix::identity(1))),
               PreconditionError);
  const BiHomAlgebra singular(Multilinear(2, 1, 1), Matrix(1, 1), Matrix::identity(1));
  EXPECT_THROW(coadjoint(singular), PreconditionError);
}

TEST(Representation, PairingAndComposedFormsAgree) {
  Rng rng(24);
  for (const auto& [name, alg] : test::small_corpus()) {
    for (int trial = 0; trial < 5; ++trial) {
      const Representation rep = test::random_representation(alg, rng, 3);
      if (!invertible_twists(rep)) continue;
      const RegularRepresentation reg(alg, rep);
      EXPECT_EQ(left_star(reg, alg), left_star_composed(reg, alg)) << name;
      EXPECT_EQ(right_star(reg, alg), right_star_composed(reg, alg)) << name;
    }
  }
}

TEST(Representation, StarStarShiftsByTwistPowers) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  const Representation adj = adjoint(d2);
  const RegularRepresentation reg(d2, adj);
  EXPECT_EQ(left_star_star(reg, d2), act_through(adj.l(), d2.twist_power(-3, 3)));
  EXPECT_EQ(right_star_star(reg, d2), act_through(adj.r(), d2.twist_power(3, -3)));
  // The shift is visible on D2.
  EXPECT_NE(left_star_star(reg, d2), adj.l());
}

TEST(Representation, DualTwiceReturnsTheModule) {
  for (const auto& [name, alg] : test::small_corpus()) {
    if (!alg.is_regular()) continue;
    const Representation adj = adjoint(alg);
    const Representation once = dual(RegularRepresentation(alg, adj), alg);
    EXPECT_EQ(dual(RegularRepresentation(alg, once), alg), adj) << name;
  }
}

TEST(Representation, CoadjointIsDualOfAdjoint) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  const Representation co = coadjoint(d2);
  EXPECT_EQ(co, dual(RegularRepresentation(d2, adjoint(d2)), d2));
  EXPECT_EQ(co.phi(), d2.alpha().inverse()->transpose());
  EXPECT_EQ(co.psi(), d2.beta().inverse()->transpose());
  EXPECT_TRUE(validate_representation(d2, co).ok());
}

}  // namespace
}  // namespace bihom
