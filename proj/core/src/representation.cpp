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
#include "bihom/representation.hpp"

#include <string>

namespace bihom {

namespace {

Matrix combine(const std::vector<Matrix>& actions, const Vector& x, std::size_t m) {
  if (x.size() != actions.size()) throw InputError("representation: vector length mismatch");
  Matrix out(m, m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) out += x[i] * actions[i];
  }
  return out;
}

void check_shapes(const BiHomAlgebra& alg, const Representation& rep) {
  if (rep.alg_dim() != alg.dim()) {
    throw InputError("representation: built for a " + std::to_string(rep.alg_dim()) +
                     "-dimensional algebra, got dimension " + std::to_string(alg.dim()));
  }
}

Matrix inverse_or_throw(const Matrix& m, const char* name) {
  auto inv = m.inverse();
  if (!inv) throw PreconditionError(std::string("regular representation: ") + name + " is singular");
  return *inv;
}

// S(e_i) = (a(T e_i) · Q)^T.
std::vector<Matrix> star_pairing(const std::vector<Matrix>& actions, const Matrix& alg_twist,
                                 const Matrix& module_inverse, std::size_t m) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < alg_twist.cols(); ++i) {
    out.push_back((combine(actions, alg_twist.column(i), m) * module_inverse).transpose());
  }
  return out;
}

}  // namespace

Representation::Representation(std::vector<Matrix> l, std::vector<Matrix> r, Matrix phi,
                               Matrix psi)
    : l_(std::move(l)), r_(std::move(r)), phi_(std::move(phi)), psi_(std::move(psi)) {
  const std::size_t m = phi_.rows();
  if (!phi_.is_square() || psi_.rows() != m || psi_.cols() != m) {
    throw InputError("representation: twists must be square of equal size");
  }
  if (l_.size() != r_.size()) throw InputError("representation: l and r lengths differ");
  for (const auto* list : {&l_, &r_}) {
    for (const auto& a : *list) {
      if (a.rows() != m || a.cols() != m) {
        throw InputError("representation: action matrices must be " + std::to_string(m) + "×" +
                         std::to_string(m));
      }
    }
  }
}

Matrix Representation::left(const Vector& x) const { return combine(l_, x, mod_dim()); }
Matrix Representation::right(const Vector& x) const { return combine(r_, x, mod_dim()); }

RepresentationReport validate_representation(const BiHomAlgebra& alg,
                                             const Representation& rep) {
  check_shapes(alg, rep);
  RepresentationReport report;
  const std::size_t n = alg.dim();
  const Matrix& phi = rep.phi();
  const Matrix& psi = rep.psi();
  const Matrix ab = alg.alpha() * alg.beta();

  if (phi * psi != psi * phi) {
    report.commuting = false;
    report.witnesses.push_back({"commuting", {}});
  }

  auto fail = [&](bool& flag, const char* name, std::vector<std::size_t> at) {
    if (flag) {
      flag = false;
      report.witnesses.push_back({name, std::move(at)});
    }
  };

  std::vector<Vector> e, a, b, abv;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(unit_vector(n, i));
    a.push_back(alg.alpha().column(i));
    b.push_back(alg.beta().column(i));
    abv.push_back(ab.column(i));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (phi * rep.l()[i] != rep.left(a[i]) * phi) fail(report.phi_left, "phi_left", {i});
    if (phi * rep.r()[i] != rep.right(a[i]) * phi) fail(report.phi_right, "phi_right", {i});
    if (psi * rep.l()[i] != rep.left(b[i]) * psi) fail(report.psi_left, "psi_left", {i});
    if (psi * rep.r()[i] != rep.right(b[i]) * psi) fail(report.psi_right, "psi_right", {i});
  }

  const Matrix phipsi = phi * psi;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& y = e[j];
      const Vector sym = alg.multiply(b[i], a[j]) + alg.multiply(b[j], a[i]);

      // ℓ(β(x)α(x))ψ = ℓ(αβ(x))ℓ(α(x)), polarized.
      if (report.rep1 && rep.left(sym) * psi != rep.left(abv[i]) * rep.left(a[j]) +
                                                    rep.left(abv[j]) * rep.left(a[i])) {
        fail(report.rep1, "rep1", {i, j});
      }
      // r(β(x)α(x))φ = r(αβ(x))r(β(x)), polarized.
      if (report.rep2 && rep.right(sym) * phi != rep.right(abv[i]) * rep.right(b[j]) +
                                                     rep.right(abv[j]) * rep.right(b[i])) {
        fail(report.rep2, "rep2", {i, j});
      }
      if (report.rep3) {
        const Matrix lhs = rep.right(b[j]) * rep.left(b[i]) * phi - rep.left(abv[i]) * rep.right(y) * phi;
        const Matrix rhs = rep.right(alg.multiply(a[i], y)) * phipsi - rep.right(b[j]) * rep.right(a[i]) * psi;
        if (lhs != rhs) fail(report.rep3, "rep3", {i, j});
      }
      if (report.rep4) {
        const Matrix lhs = rep.left(a[j]) * rep.right(a[i]) * psi - rep.right(abv[i]) * rep.left(y) * psi;
        const Matrix rhs = rep.left(alg.multiply(y, b[i])) * phipsi - rep.left(a[j]) * rep.left(b[i]) * phi;
        if (lhs != rhs) fail(report.rep4, "rep4", {i, j});
      }
    }
  }
  return report;
}

Representation adjoint(const BiHomAlgebra& alg) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Vector ei = unit_vector(alg.dim(), i);
    l.push_back(alg.left_multiplication(ei));
    r.push_back(alg.right_multiplication(ei));
  }
  return Representation(std::move(l), std::move(r), alg.alpha(), alg.beta());
}

Representation trivial_representation(std::size_t alg_dim, Matrix phi, Matrix psi) {
  const std::size_t m = phi.rows();
  std::vector<Matrix> zero(alg_dim, Matrix(m, m));
  return Representation(zero, zero, std::move(phi), std::move(psi));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.alg_dim() != b.alg_dim()) throw InputError("direct_sum: algebra dimensions differ");
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.alg_dim(); ++i) {
    l.push_back(direct_sum(a.l()[i], b.l()[i]));
    r.push_back(direct_sum(a.r()[i], b.r()[i]));
  }
  return Representation(std::move(l), std::move(r), direct_sum(a.phi(), b.phi()),
                        direct_sum(a.psi(), b.psi()));
}

Representation change_basis(const Representation& rep, const Matrix& p) {
  auto inv = p.inverse();
  if (!inv) throw PreconditionError("change_basis: singular basis matrix");
  auto conj = [&](const Matrix& m) { return *inv * m * p; };
  std::vector<Matrix> l, r;
  for (const auto& m : rep.l()) l.push_back(conj(m));
  for (const auto& m : rep.r()) r.push_back(conj(m));
  return Representation(std::move(l), std::move(r), conj(rep.phi()), conj(rep.psi()));
}

BiHomAlgebra semidirect(const BiHomAlgebra& alg, const Representation& rep) {
  check_shapes(alg, rep);
  const std::size_t n = alg.dim();
  const std::size_t m = rep.mod_dim();
  Multilinear mu(2, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector p = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) mu.at({i, j}, k) = p[k];
    }
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t k = 0; k < m; ++k) {
        mu.at({i, n + v}, n + k) = rep.l()[i](k, v);  // ℓ(e_i) v
        mu.at({n + v, i}, n + k) = rep.r()[i](k, v);  // r(e_i) v
      }
    }
  }
  return BiHomAlgebra(std::move(mu), direct_sum(alg.alpha(), rep.phi()),
                      direct_sum(alg.beta(), rep.psi()));
}

RegularRepresentation::RegularRepresentation(const BiHomAlgebra& alg, Representation rep)
    : inner_(std::move(rep)),
      alpha_inv_(inverse_or_throw(alg.alpha(), "alpha")),
      beta_inv_(inverse_or_throw(alg.beta(), "beta")),
      phi_inv_(inverse_or_throw(inner_.phi(), "phi")),
      psi_inv_(inverse_or_throw(inner_.psi(), "psi")) {
  check_shapes(alg, inner_);
}

std::vector<Matrix> left_star(const RegularRepresentation& reg, const BiHomAlgebra& alg) {
  const Matrix twist = reg.alpha_inv() * reg.alpha_inv() * alg.beta();
  return star_pairing(reg.inner().l(), twist, reg.phi_inv() * reg.psi_inv(),
                      reg.inner().mod_dim());
}

std::vector<Matrix> right_star(const RegularRepresentation& reg, const BiHomAlgebra& alg) {
  const Matrix twist = alg.alpha() * reg.beta_inv() * reg.beta_inv();
  return star_pairing(reg.inner().r(), twist, reg.phi_inv() * reg.psi_inv(),
                      reg.inner().mod_dim());
}

std::vector<Matrix> left_star_composed(const RegularRepresentation& reg,
                                       const BiHomAlgebra& alg) {
  const Matrix twist = reg.alpha_inv() * alg.beta() * alg.beta();
  const Matrix dual_twist = (reg.phi_inv() * reg.psi_inv()).transpose();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    out.push_back(reg.inner().left(twist.column(i)).transpose() * dual_twist);
  }
  return out;
}

std::vector<Matrix> right_star_composed(const RegularRepresentation& reg,
                                        const BiHomAlgebra& alg) {
  const Matrix twist = alg.alpha() * alg.alpha() * reg.beta_inv();
  const Matrix dual_twist = (reg.phi_inv() * reg.psi_inv()).transpose();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    out.push_back(reg.inner().right(twist.column(i)).transpose() * dual_twist);
  }
  return out;
}

Representation dual(const RegularRepresentation& reg, const BiHomAlgebra& alg) {
  check_shapes(alg, reg.inner());
  return Representation(right_star(reg, alg), left_star(reg, alg), reg.phi_inv().transpose(),
                        reg.psi_inv().transpose());
}

Representation coadjoint(const BiHomAlgebra& alg) {
  return dual(RegularRepresentation(alg, adjoint(alg)), alg);
}

std::vector<Matrix> left_star_star(const RegularRepresentation& reg, const BiHomAlgebra& alg) {
  // On V* the twists are (φ⁻¹)*, (ψ⁻¹)*, whose inverses are φ*, ψ*.
  const Matrix twist = reg.alpha_inv() * reg.alpha_inv() * alg.beta();
  const Matrix dual_inverse = reg.inner().phi().transpose() * reg.inner().psi().transpose();
  return star_pairing(left_star(reg, alg), twist, dual_inverse, reg.inner().mod_dim());
}

std::vector<Matrix> right_star_star(const RegularRepresentation& reg, const BiHomAlgebra& alg) {
  const Matrix twist = alg.alpha() * reg.beta_inv() * reg.beta_inv();
  const Matrix dual_inverse = reg.inner().phi().transpose() * reg.inner().psi().transpose();
  return star_pairing(right_star(reg, alg), twist, dual_inverse, reg.inner().mod_dim());
}

}  // namespace bihom
