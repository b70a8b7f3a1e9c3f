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
#include "bihom/deformation.hpp"

#include <algorithm>
#include <string>

#include "bihom/cohomology.hpp"
#include "bihom/linalg.hpp"
#include "bihom/representation.hpp"

namespace bihom {

namespace {

void check_term_shape(const BiHomAlgebra& alg, const Multilinear& d, const std::string& what) {
  if (d.arity() != 2 || d.in_dim() != alg.dim() || d.out_dim() != alg.dim()) {
    throw InputError(what + ": expected a bilinear map on a space of dimension " +
                     std::to_string(alg.dim()));
  }
}

void check_shapes(const TruncatedDeformation& defm) {
  for (std::size_t i = 0; i < defm.terms.size(); ++i) {
    check_term_shape(defm.alg, defm.terms[i], "deformation term d_" + std::to_string(i + 1));
  }
}

// d(P x, Q y).
Multilinear bilinear_compose(const Multilinear& d, const Matrix& p, const Matrix& q) {
  const std::size_t n = d.in_dim();
  std::vector<Vector> pc, qc;
  for (std::size_t j = 0; j < n; ++j) {
    pc.push_back(p.column(j));
    qc.push_back(q.column(j));
  }
  Multilinear out(2, n, d.out_dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector args[] = {pc[i], qc[j]};
      const std::size_t t[] = {i, j};
      out.set_value(t, d.evaluate(args));
    }
  }
  return out;
}

// Throws when d_i fails to commute with α or β, naming the first pair.
void check_compatible(const BiHomAlgebra& alg, const Multilinear& d, std::size_t index) {
  const Multilinear da = d.precompose(alg.alpha()), ad = d.postcompose(alg.alpha());
  const Multilinear db = d.precompose(alg.beta()), bd = d.postcompose(alg.beta());
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const char* twist = nullptr;
      if (da.value({i, j}) != ad.value({i, j})) twist = "alpha";
      else if (db.value({i, j}) != bd.value({i, j})) twist = "beta";
      if (twist) {
        throw PreconditionError("deformation term d_" + std::to_string(index) +
                                " does not commute with " + twist + " at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

std::vector<Matrix> unipotent_inverse(const FormalIsomorphism& phi, std::size_t dim,
                                      std::size_t m) {
  std::vector<Matrix> inv{Matrix::identity(dim)};
  for (std::size_t k = 1; k <= m; ++k) {
    Matrix acc(dim, dim);
    for (std::size_t j = 1; j <= k; ++j) {
      if (j <= phi.order()) acc -= phi.terms[j - 1] * inv[k - j];
    }
    inv.push_back(std::move(acc));
  }
  return inv;
}

}  // namespace

Multilinear TruncatedDeformation::term(std::size_t i) const {
  if (i == 0) return alg.mu();
  if (i <= terms.size()) return terms[i - 1];
  return Multilinear(2, alg.dim(), alg.dim());
}

Matrix FormalIsomorphism::term(std::size_t i, std::size_t dim) const {
  if (i == 0) return Matrix::identity(dim);
  if (i <= terms.size()) return terms[i - 1];
  return Matrix(dim, dim);
}

bool DeformationReport::ok() const {
  return std::all_of(orders.begin(), orders.end(), [](bool b) { return b; });
}

bool DeformationReport::ok_through(std::size_t k) const {
  for (std::size_t i = 0; i <= k && i < orders.size(); ++i) {
    if (!orders[i]) return false;
  }
  return k < orders.size();
}

Multilinear diamond(const BiHomAlgebra& alg, const Multilinear& a, const Multilinear& b) {
  check_term_shape(alg, a, "diamond");
  check_term_shape(alg, b, "diamond");
  const std::size_t n = alg.dim();
  const Matrix ab = alg.alpha() * alg.beta();
  std::vector<Vector> e, al, be, albe;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(unit_vector(n, i));
    al.push_back(alg.alpha().column(i));
    be.push_back(alg.beta().column(i));
    albe.push_back(ab.column(i));
  }
  auto ev = [](const Multilinear& f, const Vector& x, const Vector& y) {
    const Vector args[] = {x, y};
    return f.evaluate(args);
  };
  Multilinear out(3, n, n);
  for_each_tuple(3, n, [&](std::span<const std::size_t> t) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    Vector v = ev(a, ev(b, be[x], al[y]), be[z]);
    v -= ev(a, albe[x], ev(b, al[y], e[z]));
    v += ev(a, ev(b, be[y], al[x]), be[z]);
    v -= ev(a, albe[y], ev(b, al[x], e[z]));
    out.set_value(t, v);
  });
  return out;
}

DeformationReport check_deformation(const TruncatedDeformation& defm) {
  check_shapes(defm);
  for (std::size_t i = 0; i < defm.terms.size(); ++i) {
    check_compatible(defm.alg, defm.terms[i], i + 1);
  }
  DeformationReport report;
  const std::size_t n = defm.alg.dim();
  for (std::size_t k = 0; k <= defm.order(); ++k) {
    Multilinear sum(3, n, n);
    for (std::size_t i = 0; i <= k; ++i) sum += diamond(defm.alg, defm.term(i), defm.term(k - i));
    bool ok = true;
    for_each_tuple(3, n, [&](std::span<const std::size_t> t) {
      if (ok && !is_zero(sum.value(t))) {
        ok = false;
        report.witnesses.push_back({"order_" + std::to_string(k), {t.begin(), t.end()}});
      }
    });
    report.orders.push_back(ok);
  }
  return report;
}

Multilinear obstruction(const TruncatedDeformation& defm, std::size_t m) {
  check_shapes(defm);
  if (m == 0 || m > defm.order() + 1) {
    throw InputError("obstruction: order " + std::to_string(m) + " needs terms up to d_" +
                     std::to_string(m - 1));
  }
  TruncatedDeformation lower{defm.alg, {defm.terms.begin(),
                                        defm.terms.begin() + static_cast<std::ptrdiff_t>(m - 1)}};
  if (!check_deformation(lower).ok()) {
    throw PreconditionError("obstruction: deformation fails below order " + std::to_string(m));
  }
  const std::size_t n = defm.alg.dim();
  Multilinear sum(3, n, n);
  for (std::size_t i = 1; i < m; ++i) {
    sum += diamond(defm.alg, defm.term(i), defm.term(m - i));
  }
  return sum;
}

std::optional<Multilinear> extend_one_order(const TruncatedDeformation& defm) {
  const std::size_t m = defm.order() + 1;
  const Multilinear obs = obstruction(defm, m);
  const Representation adj = adjoint(defm.alg);
  const Subspace c2 = cochain_basis(defm.alg, adj, 2);
  const Matrix d2 = coboundary_matrix(defm.alg, adj, 2) * c2.as_columns();
  const auto coeffs = solve(d2, Rational(-1) * obs.coordinates());
  if (!coeffs) return std::nullopt;
  const std::size_t n = defm.alg.dim();
  return Multilinear::from_coordinates(2, n, n, c2.combine(*coeffs));
}

bool check_equivalence(const TruncatedDeformation& d, const TruncatedDeformation& d_prime,
                       const FormalIsomorphism& phi, std::size_t m) {
  check_shapes(d);
  check_shapes(d_prime);
  const std::size_t n = d.alg.dim();
  if (d_prime.alg.dim() != n) throw InputError("check_equivalence: dimension mismatch");
  for (const auto& p : phi.terms) {
    if (p.rows() != n || p.cols() != n) {
      throw InputError("check_equivalence: isomorphism term has the wrong shape");
    }
    if (p * d.alg.alpha() != d.alg.alpha() * p || p * d.alg.beta() != d.alg.beta() * p) {
      return false;
    }
  }
  for (std::size_t k = 0; k <= m; ++k) {
    Multilinear lhs(2, n, n), rhs(2, n, n);
    for (std::size_t i = 0; i <= k; ++i) lhs += d.term(k - i).postcompose(phi.term(i, n));
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t a = 0; a + i <= k; ++a) {
        rhs += bilinear_compose(d_prime.term(i), phi.term(a, n), phi.term(k - i - a, n));
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

TruncatedDeformation gauge(const TruncatedDeformation& defm, const FormalIsomorphism& phi,
                           std::size_t m) {
  check_shapes(defm);
  const std::size_t n = defm.alg.dim();
  const auto inv = unipotent_inverse(phi, n, m);
  // Inner series d_t(φ_t x, φ_t y), then the outer φ_t⁻¹.
  std::vector<Multilinear> inner;
  for (std::size_t k = 0; k <= m; ++k) {
    Multilinear acc(2, n, n);
    for (std::size_t b = 0; b <= k; ++b) {
      const Multilinear db = defm.term(b);
      if (db.is_zero()) continue;
      for (std::size_t c = 0; b + c <= k; ++c) {
        acc += bilinear_compose(db, phi.term(c, n), phi.term(k - b - c, n));
      }
    }
    inner.push_back(std::move(acc));
  }
  TruncatedDeformation out{defm.alg, {}};
  for (std::size_t k = 1; k <= m; ++k) {
    Multilinear acc(2, n, n);
    for (std::size_t a = 0; a <= k; ++a) {
      if (!inner[k - a].is_zero()) acc += inner[k - a].postcompose(inv[a]);
    }
    out.terms.push_back(std::move(acc));
  }
  return out;
}

FormalIsomorphism compose(const FormalIsomorphism& phi, const FormalIsomorphism& psi,
                          std::size_t dim, std::size_t m) {
  FormalIsomorphism out;
  for (std::size_t k = 1; k <= m; ++k) {
    Matrix acc(dim, dim);
    for (std::size_t i = 0; i <= k; ++i) acc += phi.term(i, dim) * psi.term(k - i, dim);
    out.terms.push_back(std::move(acc));
  }
  return out;
}

TrivializeResult trivialize(const TruncatedDeformation& defm, std::size_t max_order) {
  check_shapes(defm);
  const std::size_t n = defm.alg.dim();
  TruncatedDeformation current{defm.alg, {}};
  for (std::size_t k = 1; k <= max_order; ++k) current.terms.push_back(defm.term(k));
  if (!check_deformation(current).ok()) {
    throw PreconditionError("trivialize: not a deformation through order " +
                            std::to_string(max_order));
  }
  const Representation adj = adjoint(defm.alg);
  const Subspace c1 = cochain_basis(defm.alg, adj, 1);
  const Matrix d1 = coboundary_matrix(defm.alg, adj, 1) * c1.as_columns();

  TrivializeResult result;
  FormalIsomorphism total;
  for (std::size_t k = 1; k <= max_order; ++k) {
    const Multilinear& dk = current.terms[k - 1];
    if (dk.is_zero()) continue;
    const auto coeffs = solve(d1, dk.coordinates());
    if (!coeffs) {
      result.failed_order = k;
      result.residual = current;
      return result;
    }
    // Degree-1 coordinates are (input, output): the transpose of row-major.
    const Matrix f = Matrix::from_coordinates(n, n, c1.combine(*coeffs)).transpose();
    FormalIsomorphism step;
    for (std::size_t i = 1; i <= k; ++i) step.terms.push_back(Matrix(n, n));
    step.terms[k - 1] = Rational(-1) * f;
    current = gauge(current, step, max_order);
    total = compose(total, step, n, max_order);
  }
  result.isomorphism = total;
  result.residual = current;
  return result;
}

}  // namespace bihom
