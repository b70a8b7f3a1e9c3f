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
#include "bihom/cohomology.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::size_t power_of(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void check_pair(const BiHomAlgebra& alg, const Representation& rep) {
  if (rep.alg_dim() != alg.dim()) {
    throw InputError("cohomology: representation is for an algebra of dimension " +
                     std::to_string(rep.alg_dim()) + ", algebra has dimension " +
                     std::to_string(alg.dim()));
  }
}

void check_shape(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f) {
  check_pair(alg, rep);
  if (f.in_dim() != alg.dim() || f.out_dim() != rep.mod_dim()) {
    throw InputError("cohomology: cochain shape does not match the algebra and module");
  }
}

// One summand sign·M·f(args) of a differential, M = identity when null.
struct Term {
  int sign;
  const Matrix* action;
  std::array<Vector, 3> args;
};

// Basis images reused by every term.
struct Context {
  const BiHomAlgebra& alg;
  std::vector<Vector> e, a, b, ab;
  std::vector<Matrix> l, r, l_a, l_ab, r_b;

  Context(const BiHomAlgebra& algebra, const Representation& rep) : alg(algebra) {
    const std::size_t n = alg.dim();
    const Matrix ab_m = alg.alpha() * alg.beta();
    for (std::size_t i = 0; i < n; ++i) {
      e.push_back(unit_vector(n, i));
      a.push_back(alg.alpha().column(i));
      b.push_back(alg.beta().column(i));
      ab.push_back(ab_m.column(i));
      l.push_back(rep.l()[i]);
      r.push_back(rep.r()[i]);
      l_a.push_back(rep.left(a[i]));
      l_ab.push_back(rep.left(ab[i]));
      r_b.push_back(rep.right(b[i]));
    }
  }

  Vector mul(const Vector& x, const Vector& y) const { return alg.multiply(x, y); }
};

// Calls fn(term) for every summand of (δⁿf)(e_t) with t an (n+1)-tuple.
template <typename Fn>
void for_each_term(const Context& c, int n, std::span<const std::size_t> t, Fn&& fn) {
  if (n == 1) {
    const std::size_t x = t[0], y = t[1];
    fn(Term{+1, &c.l[x], {c.e[y]}});
    fn(Term{+1, &c.r[y], {c.e[x]}});
    fn(Term{-1, nullptr, {c.mul(c.e[x], c.e[y])}});
  } else if (n == 2) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    fn(Term{+1, &c.r_b[z], {c.b[x], c.a[y]}});
    fn(Term{-1, &c.l_ab[x], {c.a[y], c.e[z]}});
    fn(Term{+1, &c.r_b[z], {c.b[y], c.a[x]}});
    fn(Term{-1, &c.l_ab[y], {c.a[x], c.e[z]}});
    fn(Term{+1, nullptr, {c.mul(c.b[x], c.a[y]), c.b[z]}});
    fn(Term{-1, nullptr, {c.ab[x], c.mul(c.a[y], c.e[z])}});
    fn(Term{+1, nullptr, {c.mul(c.b[y], c.a[x]), c.b[z]}});
    fn(Term{-1, nullptr, {c.ab[y], c.mul(c.a[x], c.e[z])}});
  } else if (n == 3) {
    const std::size_t x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
    const Vector p12 = c.mul(c.a[x1], c.b[x2]);
    const Vector p23 = c.mul(c.a[x2], c.b[x3]);
    const Vector p34 = c.mul(c.a[x3], c.b[x4]);
    fn(Term{+1, &c.l_a[x1], {c.b[x2], c.b[x3], c.b[x4]}});
    fn(Term{-1, &c.l_a[x1], {c.b[x3], c.b[x2], c.b[x4]}});
    fn(Term{+1, &c.r_b[x4], {c.a[x1], c.a[x2], c.a[x3]}});
    fn(Term{-1, &c.r_b[x4], {c.a[x2], c.a[x1], c.a[x3]}});
    fn(Term{-1, nullptr, {p12, c.e[x3], c.e[x4]}});
    fn(Term{-1, nullptr, {p23, c.e[x1], c.e[x4]}});
    fn(Term{+1, nullptr, {c.e[x1], p23, c.e[x4]}});
    fn(Term{+1, nullptr, {c.e[x3], p12, c.e[x4]}});
    fn(Term{-1, nullptr, {c.e[x1], c.e[x2], p34}});
    fn(Term{+1, nullptr, {c.e[x2], c.e[x1], p34}});
  }
}

// Appends the constraint rows twist·f(e_J) − f(T e_J) = 0 for every J.
void add_twist_constraints(Matrix& m, std::size_t row0, const Matrix& twist,
                           const Matrix& module_twist, std::size_t dim, std::size_t mod,
                           int n) {
  const std::size_t tuples = power_of(dim, n);
  std::vector<std::size_t> jt(static_cast<std::size_t>(n));
  for (std::size_t J = 0; J < tuples; ++J) {
    std::size_t rest = J;
    for (int p = n - 1; p >= 0; --p) {
      jt[static_cast<std::size_t>(p)] = rest % dim;
      rest /= dim;
    }
    for (std::size_t k = 0; k < mod; ++k) {
      const std::size_t row = row0 + J * mod + k;
      for (std::size_t kk = 0; kk < mod; ++kk) m(row, J * mod + kk) += module_twist(k, kk);
    }
    for (std::size_t I = 0; I < tuples; ++I) {
      std::size_t r2 = I;
      Rational coeff = 1;
      for (int p = n - 1; p >= 0 && sgn(coeff) != 0; --p) {
        const std::size_t i = r2 % dim;
        r2 /= dim;
        coeff *= twist(i, jt[static_cast<std::size_t>(p)]);
      }
      if (sgn(coeff) == 0) continue;
      for (std::size_t k = 0; k < mod; ++k) m(row0 + J * mod + k, I * mod + k) -= coeff;
    }
  }
}

Multilinear apply(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f) {
  const int n = static_cast<int>(f.arity());
  Multilinear out(f.arity() + 1, alg.dim(), rep.mod_dim());
  if (n < 1 || n > 3) return out;
  const Context c(alg, rep);
  for_each_tuple(f.arity() + 1, alg.dim(), [&](std::span<const std::size_t> t) {
    Vector value = zero_vector(rep.mod_dim());
    for_each_term(c, n, t, [&](const Term& term) {
      Vector v = f.evaluate(std::span<const Vector>(term.args.data(), f.arity()));
      if (term.action) v = *term.action * v;
      axpy(value, Rational(term.sign), v);
    });
    out.set_value(t, value);
  });
  return out;
}

Multilinear checked(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f,
                    std::size_t degree) {
  check_shape(alg, rep, f);
  if (f.arity() != degree) {
    throw InputError("delta" + std::to_string(degree) + ": expected a degree-" +
                     std::to_string(degree) + " cochain, got degree " +
                     std::to_string(f.arity()));
  }
  if (!is_cochain(alg, rep, f)) {
    throw PreconditionError("delta" + std::to_string(degree) +
                            ": input violates the twist compatibility conditions");
  }
  return apply(alg, rep, f);
}

void check_degree(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw InputError(std::string(what) + ": degree " + std::to_string(n) + " out of range " +
                     std::to_string(lo) + ".." + std::to_string(hi));
  }
}

// Columns δⁿ(b) for b in the basis of Cⁿ, in the ambient degree-(n+1) space.
Matrix restricted_coboundary(const BiHomAlgebra& alg, const Representation& rep, int n,
                             const Subspace& basis) {
  const Matrix d = coboundary_matrix(alg, rep, n);
  return d * basis.as_columns();
}

}  // namespace

Subspace cochain_basis(const BiHomAlgebra& alg, const Representation& rep, int n) {
  check_pair(alg, rep);
  check_degree(n, 1, 4, "cochain_basis");
  const std::size_t dim = alg.dim(), mod = rep.mod_dim();
  const std::size_t size = power_of(dim, n) * mod;
  Matrix constraints(2 * size, size);
  add_twist_constraints(constraints, 0, alg.alpha(), rep.phi(), dim, mod, n);
  add_twist_constraints(constraints, size, alg.beta(), rep.psi(), dim, mod, n);
  return rank_nullspace(constraints).kernel;
}

bool is_cochain(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f) {
  if (rep.alg_dim() != alg.dim() || f.in_dim() != alg.dim() ||
      f.out_dim() != rep.mod_dim() || f.arity() < 1) {
    return false;
  }
  return f.postcompose(rep.phi()) == f.precompose(alg.alpha()) &&
         f.postcompose(rep.psi()) == f.precompose(alg.beta());
}

Multilinear coboundary(const BiHomAlgebra& alg, const Representation& rep,
                       const Multilinear& f) {
  check_shape(alg, rep, f);
  return apply(alg, rep, f);
}

Multilinear delta1(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f) {
  return checked(alg, rep, f, 1);
}

Multilinear delta2(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f) {
  return checked(alg, rep, f, 2);
}

Multilinear delta3(const BiHomAlgebra& alg, const Representation& rep, const Multilinear& f) {
  return checked(alg, rep, f, 3);
}

Matrix coboundary_matrix(const BiHomAlgebra& alg, const Representation& rep, int n) {
  check_pair(alg, rep);
  check_degree(n, 1, 3, "coboundary_matrix");
  const std::size_t dim = alg.dim(), mod = rep.mod_dim();
  const std::size_t in_tuples = power_of(dim, n);
  const std::size_t out_tuples = power_of(dim, n + 1);
  Matrix m(out_tuples * mod, in_tuples * mod);
  const Context c(alg, rep);
  const auto un = static_cast<std::size_t>(n);

  std::size_t row_tuple = 0;
  for_each_tuple(un + 1, dim, [&](std::span<const std::size_t> t) {
    const std::size_t row0 = row_tuple * mod;
    for_each_term(c, n, t, [&](const Term& term) {
      // Expand f(args) = Σ_I Π_a args[a][I_a] f(e_I) over the nonzero support.
      for_each_tuple(un, dim, [&](std::span<const std::size_t> I) {
        Rational coeff = term.sign;
        for (std::size_t p = 0; p < un; ++p) {
          const Rational& v = term.args[p][I[p]];
          if (sgn(v) == 0) return;
          coeff *= v;
        }
        std::size_t col_tuple = 0;
        for (auto i : I) col_tuple = col_tuple * dim + i;
        const std::size_t col0 = col_tuple * mod;
        if (term.action == nullptr) {
          for (std::size_t k = 0; k < mod; ++k) m(row0 + k, col0 + k) += coeff;
        } else {
          const Matrix& act = *term.action;
          for (std::size_t k = 0; k < mod; ++k) {
            for (std::size_t kk = 0; kk < mod; ++kk) {
              if (sgn(act(k, kk)) != 0) m(row0 + k, col0 + kk) += coeff * act(k, kk);
            }
          }
        }
      });
    });
    ++row_tuple;
  });
  return m;
}

Subspace cocycles(const BiHomAlgebra& alg, const Representation& rep, int n) {
  check_degree(n, 1, 3, "cocycles");
  const Subspace c = cochain_basis(alg, rep, n);
  const auto kernel = rank_nullspace(restricted_coboundary(alg, rep, n, c)).kernel;
  std::vector<Vector> vectors;
  for (const auto& coeffs : kernel.basis()) vectors.push_back(c.combine(coeffs));
  return Subspace::span(c.ambient_dim(), vectors);
}

Subspace coboundaries(const BiHomAlgebra& alg, const Representation& rep, int n) {
  check_degree(n, 2, 4, "coboundaries");
  const Subspace c = cochain_basis(alg, rep, n - 1);
  const Matrix images = restricted_coboundary(alg, rep, n - 1, c);
  std::vector<Vector> vectors;
  for (std::size_t j = 0; j < images.cols(); ++j) vectors.push_back(images.column(j));
  return Subspace::span(images.rows(), vectors);
}

ComplexReport complex_report(const BiHomAlgebra& alg, const Representation& rep, int n) {
  check_pair(alg, rep);
  if (n != 2 && n != 3) throw InputError("complex_report: degree must be 2 or 3");
  const AlgebraReport ar = validate(alg);
  if (!ar.left_ok()) {
    throw PreconditionError("complex_report: algebra is not left BiHom-alternative");
  }
  if (!validate_representation(alg, rep).ok()) {
    throw PreconditionError("complex_report: representation fails its axioms");
  }
  const Subspace cn = cochain_basis(alg, rep, n);
  const Subspace cprev = cochain_basis(alg, rep, n - 1);
  const Matrix dn = coboundary_matrix(alg, rep, n);
  const Matrix dn_c = dn * cn.as_columns();
  const Matrix dprev_c = coboundary_matrix(alg, rep, n - 1) * cprev.as_columns();

  ComplexReport report;
  report.degree = n;
  report.dim_C = cn.dim();
  report.dim_Z = cn.dim() - rank(dn_c);
  report.dim_B = rank(dprev_c);
  std::vector<Vector> images;
  for (std::size_t j = 0; j < dprev_c.cols(); ++j) images.push_back(dprev_c.column(j));
  const bool in_cochains = cn.contains(Subspace::span(dprev_c.rows(), images));
  if (!in_cochains || !(dn * dprev_c).is_zero() || report.dim_B > report.dim_Z) {
    throw std::logic_error("complex_report: coboundaries are not cocycles");
  }
  report.dim_H = report.dim_Z - report.dim_B;
  return report;
}

}  // namespace bihom
