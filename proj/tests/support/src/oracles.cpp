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
#include <stdexcept>

#include "bihom_test/support.hpp"

namespace bihom::test {

namespace {

using Args = std::vector<Vector>;

Vector eval(const Multilinear& f, const Args& args) { return f.evaluate(args); }

// Fills an arity-n map from its values on basis tuples.
template <typename Fn>
Multilinear tabulate(int arity, std::size_t in_dim, std::size_t out_dim, Fn&& value) {
  Multilinear out(static_cast<std::size_t>(arity), in_dim, out_dim);
  for_each_tuple(static_cast<std::size_t>(arity), in_dim, [&](std::span<const std::size_t> t) {
    Args basis;
    for (std::size_t i : t) basis.push_back(unit_vector(in_dim, i));
    out.set_value(t, value(basis));
  });
  return out;
}

std::size_t ambient(int arity, std::size_t in_dim, std::size_t out_dim) {
  std::size_t size = out_dim;
  for (int i = 0; i < arity; ++i) size *= in_dim;
  return size;
}

// Matrix of f ↦ (φf − f∘α^⊗n, ψf − f∘β^⊗n).
Matrix twist_constraints(const BiHomAlgebra& alg, const Representation& rep, int arity) {
  const std::size_t n = alg.dim(), m = rep.mod_dim();
  const std::size_t size = ambient(arity, n, m);
  return matrix_of(size, 2 * size, [&](const Vector& c) {
    const Multilinear f = as_multilinear(c, arity, n, m);
    Vector out = (f.postcompose(rep.phi()) - f.precompose(alg.alpha())).coordinates();
    const Vector second = (f.postcompose(rep.psi()) - f.precompose(alg.beta())).coordinates();
    out.insert(out.end(), second.begin(), second.end());
    return out;
  });
}

Multilinear naive_delta(const BiHomAlgebra& alg, const Representation& rep,
                        const Multilinear& f) {
  switch (f.arity()) {
    case 1:
      return naive_delta1(alg, rep, f);
    case 2:
      return naive_delta2(alg, rep, f);
    case 3:
      return naive_delta3(alg, rep, f);
    default:
      throw std::logic_error("naive_delta: arity");
  }
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < top.rows(); ++r) rows.push_back(top.row(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) rows.push_back(bottom.row(r));
  return Matrix::from_rows(rows);
}

}  // namespace

Multilinear naive_delta1(const BiHomAlgebra& alg, const Representation& rep,
                         const Multilinear& f) {
  return tabulate(2, alg.dim(), rep.mod_dim(), [&](const Args& a) {
    const Vector& x = a[0];
    const Vector& y = a[1];
    return rep.left(x) * eval(f, {y}) + rep.right(y) * eval(f, {x}) -
           eval(f, {alg.multiply(x, y)});
  });
}

Multilinear naive_delta2(const BiHomAlgebra& alg, const Representation& rep,
                         const Multilinear& f) {
  const Matrix& al = alg.alpha();
  const Matrix& be = alg.beta();
  const Matrix ab = al * be;
  return tabulate(3, alg.dim(), rep.mod_dim(), [&](const Args& a) {
    const Vector& x = a[0];
    const Vector& y = a[1];
    const Vector& z = a[2];
    Vector v = rep.right(be * z) * eval(f, {be * x, al * y});
    v -= rep.left(ab * x) * eval(f, {al * y, z});
    v += rep.right(be * z) * eval(f, {be * y, al * x});
    v -= rep.left(ab * y) * eval(f, {al * x, z});
    v += eval(f, {alg.multiply(be * x, al * y), be * z});
    v -= eval(f, {ab * x, alg.multiply(al * y, z)});
    v += eval(f, {alg.multiply(be * y, al * x), be * z});
    v -= eval(f, {ab * y, alg.multiply(al * x, z)});
    return v;
  });
}

Multilinear naive_delta3(const BiHomAlgebra& alg, const Representation& rep,
                         const Multilinear& f) {
  const Matrix& al = alg.alpha();
  const Matrix& be = alg.beta();
  return tabulate(4, alg.dim(), rep.mod_dim(), [&](const Args& a) {
    const Vector& x1 = a[0];
    const Vector& x2 = a[1];
    const Vector& x3 = a[2];
    const Vector& x4 = a[3];
    const Vector p12 = alg.multiply(al * x1, be * x2);
    const Vector p23 = alg.multiply(al * x2, be * x3);
    const Vector p34 = alg.multiply(al * x3, be * x4);
    Vector v = rep.left(al * x1) * eval(f, {be * x2, be * x3, be * x4});
    v -= rep.left(al * x1) * eval(f, {be * x3, be * x2, be * x4});
    v += rep.right(be * x4) * eval(f, {al * x1, al * x2, al * x3});
    v -= rep.right(be * x4) * eval(f, {al * x2, al * x1, al * x3});
    v -= eval(f, {p12, x3, x4});
    v -= eval(f, {p23, x1, x4});
    v += eval(f, {x1, p23, x4});
    v += eval(f, {x3, p12, x4});
    v -= eval(f, {x1, x2, p34});
    v += eval(f, {x2, x1, p34});
    return v;
  });
}

ComplexReport naive_complex_report(const BiHomAlgebra& alg, const Representation& rep, int n) {
  const std::size_t d = alg.dim(), m = rep.mod_dim();
  auto delta_matrix = [&](int arity) {
    return matrix_of(ambient(arity, d, m), ambient(arity + 1, d, m), [&](const Vector& c) {
      return naive_delta(alg, rep, as_multilinear(c, arity, d, m)).coordinates();
    });
  };
  const Matrix constraints = twist_constraints(alg, rep, n);
  ComplexReport out;
  out.degree = n;
  out.dim_C = rank_nullspace(constraints).kernel.dim();
  out.dim_Z = rank_nullspace(stack(constraints, delta_matrix(n))).kernel.dim();
  const Subspace lower = rank_nullspace(twist_constraints(alg, rep, n - 1)).kernel;
  const Matrix lower_delta = delta_matrix(n - 1);
  std::vector<Vector> images;
  for (const auto& v : lower.basis()) images.push_back(lower_delta * v);
  out.dim_B = Subspace::span(ambient(n, d, m), images).dim();
  out.dim_H = out.dim_Z - out.dim_B;
  return out;
}

std::size_t naive_operator_dim(const BiHomAlgebra& alg, OperatorKind kind, TwistExponents e) {
  const std::size_t n = alg.dim(), block = n * n;
  const Matrix tau = alg.twist_power(e.k, e.l);
  std::size_t blocks = 1;
  if (kind == OperatorKind::QDer) blocks = 2;
  if (kind == OperatorKind::GDer || kind == OperatorKind::SGDer) blocks = 3;

  // Rows: commutation of each block with α and β, then the defining
  // equations on every basis pair.
  const Matrix constraint = matrix_of(blocks * block, blocks * block * 2 + 2 * n * n * n,
                                      [&](const Vector& c) {
    std::vector<Matrix> u;
    for (std::size_t b = 0; b < blocks; ++b) {
      u.push_back(Matrix::from_coordinates(
          n, n, Vector(c.begin() + static_cast<long>(b * block),
                       c.begin() + static_cast<long>((b + 1) * block))));
    }
    Vector out;
    for (const auto& x : u) {
      const Vector a = commutator(x, alg.alpha()).coordinates();
      const Vector b = commutator(x, alg.beta()).coordinates();
      out.insert(out.end(), a.begin(), a.end());
      out.insert(out.end(), b.begin(), b.end());
    }
    // P(w) = w(e_i e_j), L(w) = w(e_i)τ(e_j), R(w) = τ(e_i)w(e_j).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
        auto P = [&](const Matrix& w) { return w * alg.multiply(ei, ej); };
        auto L = [&](const Matrix& w) { return alg.multiply(w * ei, tau * ej); };
        auto R = [&](const Matrix& w) { return alg.multiply(tau * ei, w * ej); };
        Vector first(n), second(n);
        switch (kind) {
          case OperatorKind::U:
            break;
          case OperatorKind::Der:
            first = P(u[0]) - L(u[0]) - R(u[0]);
            break;
          case OperatorKind::QDer:
            first = P(u[1]) - L(u[0]) - R(u[0]);
            break;
          case OperatorKind::GDer:
            first = P(u[2]) - L(u[0]) - R(u[1]);
            break;
          case OperatorKind::SGDer:
            first = P(u[2]) - L(u[0]) - R(u[1]);
            second = P(u[2]) - L(u[1]) - R(u[0]);
            break;
          case OperatorKind::Centroid:
            first = P(u[0]) - L(u[0]);
            second = P(u[0]) - R(u[0]);
            break;
          case OperatorKind::QuasiCentroid:
            first = L(u[0]) - R(u[0]);
            break;
        }
        out.insert(out.end(), first.begin(), first.end());
        out.insert(out.end(), second.begin(), second.end());
      }
    }
    return out;
  });
  const Subspace kernel = rank_nullspace(constraint).kernel;
  std::vector<Vector> projected;
  for (const auto& v : kernel.basis()) {
    projected.emplace_back(v.begin(), v.begin() + static_cast<long>(block));
  }
  return Subspace::span(block, projected).dim();
}

}  // namespace bihom::test
