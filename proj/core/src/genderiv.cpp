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
#include "bihom/genderiv.hpp"

#include <stdexcept>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

// The three bilinear expressions an operator equation is built from, each
// flattened over basis pairs (i, j) and output coordinate k.
enum class Form { Product, Left, Right };

struct Forms {
  const BiHomAlgebra& alg;
  Matrix tau;
  std::vector<Vector> tau_cols;

  Forms(const BiHomAlgebra& algebra, TwistExponents e)
      : alg(algebra), tau(algebra.twist_power(e.k, e.l)) {
    for (std::size_t i = 0; i < alg.dim(); ++i) tau_cols.push_back(tau.column(i));
  }

  // Product: u(e_i e_j). Left: u(e_i)·τ(e_j). Right: τ(e_i)·u(e_j).
  Vector eval(Form form, const Matrix& u) const {
    const std::size_t n = alg.dim();
    Vector out;
    out.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector v;
        switch (form) {
          case Form::Product: v = u * alg.product(i, j); break;
          case Form::Left: v = alg.multiply(u.column(i), tau_cols[j]); break;
          case Form::Right: v = alg.multiply(tau_cols[i], u.column(j)); break;
        }
        out.insert(out.end(), v.begin(), v.end());
      }
    }
    return out;
  }
};

struct Summand {
  std::size_t block;
  Form form;
  int sign;
};
using Equation = std::vector<Summand>;

bool in_U(const BiHomAlgebra& alg, const Matrix& u) {
  return u * alg.alpha() == alg.alpha() * u && u * alg.beta() == alg.beta() * u;
}

void check_operator(const BiHomAlgebra& alg, const Matrix& u) {
  if (u.rows() != alg.dim() || u.cols() != alg.dim()) {
    throw InputError("operator: expected a " + std::to_string(alg.dim()) + "×" +
                     std::to_string(alg.dim()) + " matrix");
  }
}

// Evaluates Σ sign·form(maps[block]) for one equation.
Vector residual(const Forms& f, const Equation& eq, const std::vector<const Matrix*>& maps) {
  const std::size_t n = f.alg.dim();
  Vector acc = zero_vector(n * n * n);
  for (const auto& s : eq) axpy(acc, Rational(s.sign), f.eval(s.form, *maps[s.block]));
  return acc;
}

bool holds(const BiHomAlgebra& alg, TwistExponents e, const std::vector<Equation>& eqs,
           const std::vector<const Matrix*>& maps) {
  for (const Matrix* m : maps) {
    check_operator(alg, *m);
    if (!in_U(alg, *m)) return false;
  }
  const Forms f(alg, e);
  for (const auto& eq : eqs) {
    if (!is_zero(residual(f, eq, maps))) return false;
  }
  return true;
}

// Column (block b, U-basis element a) of the joint linear system.
Matrix system_matrix(const Forms& f, const std::vector<Matrix>& u_basis, std::size_t blocks,
                     const std::vector<Equation>& eqs) {
  const std::size_t n = f.alg.dim();
  const std::size_t rows_per = n * n * n;
  const std::size_t p = u_basis.size();
  Matrix m(eqs.size() * rows_per, blocks * p);
  for (std::size_t q = 0; q < eqs.size(); ++q) {
    for (const auto& s : eqs[q]) {
      for (std::size_t a = 0; a < p; ++a) {
        const Vector v = f.eval(s.form, u_basis[a]);
        for (std::size_t r = 0; r < rows_per; ++r) {
          if (sgn(v[r]) != 0) m(q * rows_per + r, s.block * p + a) += s.sign * v[r];
        }
      }
    }
  }
  return m;
}

Matrix combine_block(const std::vector<Matrix>& u_basis, const Vector& coeffs, std::size_t block,
                     std::size_t n) {
  Matrix out(n, n);
  const std::size_t p = u_basis.size();
  for (std::size_t a = 0; a < p; ++a) {
    const Rational& c = coeffs[block * p + a];
    if (sgn(c) != 0) out += c * u_basis[a];
  }
  return out;
}

// Solves the joint system in U^blocks and projects to block 0.
OperatorSpace solve_space(const BiHomAlgebra& alg, OperatorKind kind, TwistExponents e,
                          std::size_t blocks, const std::vector<Equation>& eqs) {
  const Forms f(alg, e);
  const std::size_t n = alg.dim();
  const OperatorSpace u = commutant_U(alg);
  OperatorSpace out;
  out.kind = kind;
  out.exponents = e;
  out.alg_dim = n;
  const auto kernel = rank_nullspace(system_matrix(f, u.basis, blocks, eqs)).kernel;

  std::vector<Matrix> firsts;
  std::vector<std::vector<Matrix>> rest;
  for (const auto& v : kernel.basis()) {
    firsts.push_back(combine_block(u.basis, v, 0, n));
    std::vector<Matrix> w;
    for (std::size_t b = 1; b < blocks; ++b) w.push_back(combine_block(u.basis, v, b, n));
    rest.push_back(std::move(w));
  }
  // Keep the first independent projections, in order, with their witnesses.
  std::vector<Vector> cols;
  for (const auto& m : firsts) cols.push_back(m.coordinates());
  Matrix stacked = Matrix::from_columns(n * n, cols);
  for (auto c : row_reduce(stacked)) {
    out.basis.push_back(firsts[c]);
    if (blocks > 1) out.witnesses.push_back(rest[c]);
  }
  return out;
}

// Block 0 = D, 1 = D', 2 = D''.
const std::vector<Equation>& der_eqs() {
  static const std::vector<Equation> eqs{
      {{0, Form::Product, 1}, {0, Form::Left, -1}, {0, Form::Right, -1}}};
  return eqs;
}
const std::vector<Equation>& qder_eqs() {
  static const std::vector<Equation> eqs{
      {{1, Form::Product, 1}, {0, Form::Left, -1}, {0, Form::Right, -1}}};
  return eqs;
}
const std::vector<Equation>& gder_eqs() {
  static const std::vector<Equation> eqs{
      {{2, Form::Product, 1}, {0, Form::Left, -1}, {1, Form::Right, -1}}};
  return eqs;
}
const std::vector<Equation>& sgder_eqs() {
  static const std::vector<Equation> eqs{
      {{2, Form::Product, 1}, {0, Form::Left, -1}, {1, Form::Right, -1}},
      {{2, Form::Product, 1}, {1, Form::Left, -1}, {0, Form::Right, -1}}};
  return eqs;
}
const std::vector<Equation>& centroid_eqs() {
  static const std::vector<Equation> eqs{{{0, Form::Product, 1}, {0, Form::Left, -1}},
                                         {{0, Form::Product, 1}, {0, Form::Right, -1}}};
  return eqs;
}
const std::vector<Equation>& qcentroid_eqs() {
  static const std::vector<Equation> eqs{{{0, Form::Left, 1}, {0, Form::Right, -1}}};
  return eqs;
}

}  // namespace

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::U: return "U";
    case OperatorKind::Der: return "Der";
    case OperatorKind::QDer: return "QDer";
    case OperatorKind::GDer: return "GDer";
    case OperatorKind::SGDer: return "SGDer";
    case OperatorKind::Centroid: return "Centroid";
    case OperatorKind::QuasiCentroid: return "QuasiCentroid";
  }
  return "?";
}

OperatorKind parse_operator_kind(std::string_view name) {
  if (name == "u") return OperatorKind::U;
  if (name == "der") return OperatorKind::Der;
  if (name == "qder") return OperatorKind::QDer;
  if (name == "gder") return OperatorKind::GDer;
  if (name == "sgder") return OperatorKind::SGDer;
  if (name == "cent") return OperatorKind::Centroid;
  if (name == "qcent") return OperatorKind::QuasiCentroid;
  throw InputError("unknown operator kind '" + std::string(name) + "'");
}

Subspace OperatorSpace::as_subspace() const {
  std::vector<Vector> vectors;
  for (const auto& m : basis) vectors.push_back(m.coordinates());
  return Subspace::span(alg_dim * alg_dim, vectors);
}

bool OperatorSpace::contains(const Matrix& m) const {
  if (m.rows() != alg_dim || m.cols() != alg_dim) return false;
  return as_subspace().contains(m.coordinates());
}

OperatorSpace commutant_U(const BiHomAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Matrix constraints = matrix_of(n * n, 2 * n * n, [&](const Vector& v) {
    const Matrix u = Matrix::from_coordinates(n, n, v);
    Vector out = commutator(u, alg.alpha()).coordinates();
    const Matrix cb = commutator(u, alg.beta());
    const Vector& b = cb.coordinates();
    out.insert(out.end(), b.begin(), b.end());
    return out;
  });
  OperatorSpace out;
  out.kind = OperatorKind::U;
  out.alg_dim = n;
  const Subspace kernel = rank_nullspace(constraints).kernel;
  for (const auto& v : kernel.basis()) {
    out.basis.push_back(Matrix::from_coordinates(n, n, v));
  }
  return out;
}

OperatorSpace derivation_space(const BiHomAlgebra& alg, TwistExponents e) {
  return solve_space(alg, OperatorKind::Der, e, 1, der_eqs());
}

OperatorSpace quasi_derivation_space(const BiHomAlgebra& alg, TwistExponents e) {
  return solve_space(alg, OperatorKind::QDer, e, 2, qder_eqs());
}

OperatorSpace generalized_derivation_space(const BiHomAlgebra& alg, TwistExponents e) {
  return solve_space(alg, OperatorKind::GDer, e, 3, gder_eqs());
}

OperatorSpace sgder_space(const BiHomAlgebra& alg, TwistExponents e) {
  return solve_space(alg, OperatorKind::SGDer, e, 3, sgder_eqs());
}

OperatorSpace centroid_space(const BiHomAlgebra& alg, TwistExponents e) {
  return solve_space(alg, OperatorKind::Centroid, e, 1, centroid_eqs());
}

OperatorSpace quasi_centroid_space(const BiHomAlgebra& alg, TwistExponents e) {
  return solve_space(alg, OperatorKind::QuasiCentroid, e, 1, qcentroid_eqs());
}

OperatorSpace operator_space(const BiHomAlgebra& alg, OperatorKind kind, TwistExponents e) {
  switch (kind) {
    case OperatorKind::U: return commutant_U(alg);
    case OperatorKind::Der: return derivation_space(alg, e);
    case OperatorKind::QDer: return quasi_derivation_space(alg, e);
    case OperatorKind::GDer: return generalized_derivation_space(alg, e);
    case OperatorKind::SGDer: return sgder_space(alg, e);
    case OperatorKind::Centroid: return centroid_space(alg, e);
    case OperatorKind::QuasiCentroid: return quasi_centroid_space(alg, e);
  }
  throw InputError("unknown operator kind");
}

bool is_derivation(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d) {
  return holds(alg, e, der_eqs(), {&d});
}

bool is_quasi_derivation(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d,
                         const Matrix& d1) {
  return holds(alg, e, qder_eqs(), {&d, &d1});
}

bool is_generalized_derivation(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d,
                               const Matrix& d1, const Matrix& d2) {
  return holds(alg, e, gder_eqs(), {&d, &d1, &d2});
}

bool is_symmetric_generalized_derivation(const BiHomAlgebra& alg, TwistExponents e,
                                         const Matrix& d, const Matrix& d1,
                                         const Matrix& d2) {
  return holds(alg, e, sgder_eqs(), {&d, &d1, &d2});
}

bool is_centroid(const BiHomAlgebra& alg, TwistExponents e, const Matrix& theta) {
  return holds(alg, e, centroid_eqs(), {&theta});
}

bool is_quasi_centroid(const BiHomAlgebra& alg, TwistExponents e, const Matrix& theta) {
  return holds(alg, e, qcentroid_eqs(), {&theta});
}

Matrix bracket(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || !u.is_square()) {
    throw InputError("bracket: operands must be square matrices of the same size");
  }
  return commutator(u, v);
}

Matrix alpha_shift(const BiHomAlgebra& alg, const Matrix& u) {
  check_operator(alg, u);
  return alg.alpha() * u;
}

Matrix beta_shift(const BiHomAlgebra& alg, const Matrix& u) {
  check_operator(alg, u);
  return alg.beta() * u;
}

SgderDecomposition sgder_decompose(const BiHomAlgebra& alg, TwistExponents e,
                                   const Matrix& d) {
  check_operator(alg, d);
  if (!in_U(alg, d)) throw PreconditionError("sgder_decompose: D does not commute with α, β");
  // Unknowns (D', D'') in U²: P(D'') − R(D') = L(D) and P(D'') − L(D') = R(D).
  const Forms f(alg, e);
  const OperatorSpace u = commutant_U(alg);
  const std::vector<Equation> eqs{{{1, Form::Product, 1}, {0, Form::Right, -1}},
                                  {{1, Form::Product, 1}, {0, Form::Left, -1}}};
  const Matrix m = system_matrix(f, u.basis, 2, eqs);
  Vector rhs = f.eval(Form::Left, d);
  const Vector r = f.eval(Form::Right, d);
  rhs.insert(rhs.end(), r.begin(), r.end());
  const auto sol = solve(m, rhs);
  if (!sol) throw PreconditionError("sgder_decompose: D is not a symmetric generalized derivation");
  return sgder_decompose(alg, e, d, combine_block(u.basis, *sol, 0, alg.dim()));
}

SgderDecomposition sgder_decompose(const BiHomAlgebra& alg, TwistExponents e, const Matrix& d,
                                   const Matrix& d_prime) {
  check_operator(alg, d);
  check_operator(alg, d_prime);
  if (!in_U(alg, d) || !in_U(alg, d_prime)) {
    throw PreconditionError("sgder_decompose: D and D' must commute with α, β");
  }
  // D'' exists iff L(D) + R(D') = L(D') + R(D) lies in the image of P on U.
  const Forms f(alg, e);
  const Vector a = f.eval(Form::Left, d) + f.eval(Form::Right, d_prime);
  const Vector b = f.eval(Form::Left, d_prime) + f.eval(Form::Right, d);
  if (a != b) {
    throw PreconditionError("sgder_decompose: the two orderings differ for this witness");
  }
  const OperatorSpace u = commutant_U(alg);
  std::vector<Vector> cols;
  for (const auto& m : u.basis) cols.push_back(f.eval(Form::Product, m));
  const Matrix p = Matrix::from_columns(a.size(), cols);
  if (!solve(p, a)) throw PreconditionError("sgder_decompose: no D'' matches this witness");

  SgderDecomposition out{Rational(1, 2) * (d + d_prime), Rational(1, 2) * (d - d_prime), d_prime};
  if (!quasi_derivation_space(alg, e).contains(out.q) ||
      !quasi_centroid_space(alg, e).contains(out.c)) {
    throw std::logic_error("sgder_decompose: decomposition left the expected spaces");
  }
  return out;
}

}  // namespace bihom
