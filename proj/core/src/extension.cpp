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
#include "bihom/extension.hpp"

#include <string>

namespace bihom {

namespace {

struct Images {
  std::vector<Vector> e, a, b, ab;

  explicit Images(const BiHomAlgebra& alg) {
    const std::size_t n = alg.dim();
    const Matrix abm = alg.alpha() * alg.beta();
    for (std::size_t i = 0; i < n; ++i) {
      e.push_back(unit_vector(n, i));
      a.push_back(alg.alpha().column(i));
      b.push_back(alg.beta().column(i));
      ab.push_back(abm.column(i));
    }
  }
};

Vector eval2(const Multilinear& f, const Vector& x, const Vector& y) {
  const Vector args[] = {x, y};
  return f.evaluate(args);
}

void check_bilinear(const BiHomAlgebra& alg, const Multilinear& f, std::size_t out_dim,
                    const char* what) {
  if (f.arity() != 2 || f.in_dim() != alg.dim() || f.out_dim() != out_dim) {
    throw InputError(std::string(what) + ": expected a bilinear map from dimension " +
                     std::to_string(alg.dim()) + " to dimension " + std::to_string(out_dim));
  }
}

// First basis pair where f∘(T⊗T) differs from M∘f, if any.
bool twist_compatible(const Multilinear& f, const Matrix& twist, const Matrix& module_twist,
                      const char* name, std::vector<Witness>& witnesses) {
  const Multilinear lhs = f.precompose(twist);
  const Multilinear rhs = f.postcompose(module_twist);
  for (std::size_t i = 0; i < f.in_dim(); ++i) {
    for (std::size_t j = 0; j < f.in_dim(); ++j) {
      if (lhs.value({i, j}) != rhs.value({i, j})) {
        witnesses.push_back({name, {i, j}});
        return false;
      }
    }
  }
  return true;
}

bool vanishes(const Multilinear& f, const char* name, std::vector<Witness>& witnesses) {
  bool ok = true;
  for_each_tuple(f.arity(), f.in_dim(), [&](std::span<const std::size_t> t) {
    if (ok && !is_zero(f.value(t))) {
      ok = false;
      witnesses.push_back({name, {t.begin(), t.end()}});
    }
  });
  return ok;
}

}  // namespace

CentralReport check_central_cocycle(const BiHomAlgebra& alg, const Multilinear& omega) {
  check_bilinear(alg, omega, omega.out_dim(), "central cocycle");
  CentralReport report;
  const std::size_t p = omega.out_dim();
  const Matrix id = Matrix::identity(p);
  report.alpha_invariant =
      twist_compatible(omega, alg.alpha(), id, "alpha_invariant", report.witnesses);
  report.beta_invariant =
      twist_compatible(omega, alg.beta(), id, "beta_invariant", report.witnesses);

  const Images im(alg);
  auto mul = [&](const Vector& x, const Vector& y) { return alg.multiply(x, y); };
  const std::size_t n = alg.dim();
  Multilinear left(3, n, p), right(3, n, p);
  for_each_tuple(3, n, [&](std::span<const std::size_t> t) {
    // Left: x = e_i, z = e_j polarized, y = e_k.
    const std::size_t i = t[0], j = t[1], k = t[2];
    Vector l = eval2(omega, mul(im.b[i], im.a[j]) + mul(im.b[j], im.a[i]), im.b[k]);
    l -= eval2(omega, im.ab[i], mul(im.a[j], im.e[k]));
    l -= eval2(omega, im.ab[j], mul(im.a[i], im.e[k]));
    left.set_value(t, l);
    // Right: x = e_i, y = e_j, z = e_k polarized.
    Vector r = eval2(omega, mul(im.e[i], im.b[j]), im.ab[k]);
    r += eval2(omega, mul(im.e[i], im.b[k]), im.ab[j]);
    r -= eval2(omega, im.a[i], mul(im.b[j], im.a[k]));
    r -= eval2(omega, im.a[i], mul(im.b[k], im.a[j]));
    right.set_value(t, r);
  });
  report.left_condition = vanishes(left, "left_condition", report.witnesses);
  report.right_condition = vanishes(right, "right_condition", report.witnesses);
  return report;
}

BiHomAlgebra central_extension(const BiHomAlgebra& alg, std::size_t v_dim,
                               const Multilinear& omega) {
  check_bilinear(alg, omega, v_dim, "central_extension");
  CentralReport report = check_central_cocycle(alg, omega);
  if (!report.ok()) {
    throw ConstructionError("central_extension: cocycle conditions fail",
                            std::move(report.witnesses));
  }
  const Representation trivial = trivial_representation(
      alg.dim(), Matrix::identity(v_dim), Matrix::identity(v_dim));
  BiHomAlgebra out = t_theta_product(alg, trivial, omega);
  AlgebraReport check = validate(out);
  if (!check.ok()) {
    throw ConstructionError("central_extension: extended algebra does not validate",
                            std::move(check.witnesses));
  }
  return out;
}

Multilinear left_cocycle_residual(const BiHomAlgebra& alg, const Representation& rep,
                                  const Multilinear& theta) {
  check_bilinear(alg, theta, rep.mod_dim(), "left cocycle");
  const Images im(alg);
  const std::size_t n = alg.dim();
  auto mul = [&](const Vector& x, const Vector& y) { return alg.multiply(x, y); };
  Multilinear out(3, n, rep.mod_dim());
  for_each_tuple(3, n, [&](std::span<const std::size_t> t) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    auto half = [&](std::size_t u, std::size_t w) {
      Vector v = eval2(theta, mul(im.b[u], im.a[w]), im.b[z]);
      v += rep.right(im.b[z]) * eval2(theta, im.b[u], im.a[w]);
      v -= eval2(theta, im.ab[u], mul(im.a[w], im.e[z]));
      v -= rep.left(im.ab[u]) * eval2(theta, im.a[w], im.e[z]);
      return v;
    };
    out.set_value(t, half(x, y) + half(y, x));
  });
  return out;
}

Multilinear right_cocycle_residual(const BiHomAlgebra& alg, const Representation& rep,
                                   const Multilinear& theta) {
  check_bilinear(alg, theta, rep.mod_dim(), "right cocycle");
  const Images im(alg);
  const std::size_t n = alg.dim();
  auto mul = [&](const Vector& x, const Vector& y) { return alg.multiply(x, y); };
  Multilinear out(3, n, rep.mod_dim());
  for_each_tuple(3, n, [&](std::span<const std::size_t> t) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    auto half = [&](std::size_t u, std::size_t w) {
      Vector v = eval2(theta, mul(im.e[x], im.b[u]), im.ab[w]);
      v += rep.right(im.ab[w]) * eval2(theta, im.e[x], im.b[u]);
      v -= eval2(theta, im.a[x], mul(im.b[u], im.a[w]));
      v -= rep.left(im.a[x]) * eval2(theta, im.b[u], im.a[w]);
      return v;
    };
    out.set_value(t, half(y, z) + half(z, y));
  });
  return out;
}

ThetaReport check_theta_cocycle(const BiHomAlgebra& alg, const Representation& rep,
                                const Multilinear& theta) {
  check_bilinear(alg, theta, rep.mod_dim(), "theta cocycle");
  ThetaReport report;
  report.phi_compatible =
      twist_compatible(theta, alg.alpha(), rep.phi(), "phi_compatible", report.witnesses);
  report.psi_compatible =
      twist_compatible(theta, alg.beta(), rep.psi(), "psi_compatible", report.witnesses);
  report.left_cocycle =
      vanishes(left_cocycle_residual(alg, rep, theta), "left_cocycle", report.witnesses);
  report.right_cocycle =
      vanishes(right_cocycle_residual(alg, rep, theta), "right_cocycle", report.witnesses);
  return report;
}

BiHomAlgebra t_theta_product(const BiHomAlgebra& alg, const Representation& rep,
                             const Multilinear& theta) {
  check_bilinear(alg, theta, rep.mod_dim(), "T_theta product");
  const BiHomAlgebra base = semidirect(alg, rep);
  Multilinear mu = base.mu();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < rep.mod_dim(); ++k) mu.at({i, j}, n + k) = theta.at({i, j}, k);
    }
  }
  return BiHomAlgebra(std::move(mu), base.alpha(), base.beta());
}

BiHomAlgebra t_theta_extension(const BiHomAlgebra& alg, const Representation& rep,
                               const Multilinear& theta) {
  check_bilinear(alg, theta, rep.mod_dim(), "t_theta_extension");
  if (!validate(alg).ok()) {
    throw PreconditionError("t_theta_extension: algebra is not BiHom-alternative");
  }
  if (!validate_representation(alg, rep).ok()) {
    throw PreconditionError("t_theta_extension: representation fails its axioms");
  }
  ThetaReport report = check_theta_cocycle(alg, rep, theta);
  if (!report.ok()) {
    throw ConstructionError("t_theta_extension: cocycle conditions fail",
                            std::move(report.witnesses));
  }
  BiHomAlgebra out = t_theta_product(alg, rep, theta);
  AlgebraReport check = validate(out);
  if (!check.ok()) {
    throw ConstructionError("t_theta_extension: extended algebra does not validate",
                            std::move(check.witnesses));
  }
  return out;
}

BiHomAlgebra t_star_theta_extension(const BiHomAlgebra& alg, const RegularRepresentation& reg,
                                    const Multilinear& theta_star) {
  return t_theta_extension(alg, dual(reg, alg), theta_star);
}

Subspace annihilator(const BiHomAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix stacked(2 * n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    const Matrix right = alg.right_multiplication(ei);  // a ↦ a·e_i
    const Matrix left = alg.left_multiplication(ei);    // a ↦ e_i·a
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        stacked(2 * i * n + r, c) = right(r, c);
        stacked((2 * i + 1) * n + r, c) = left(r, c);
      }
    }
  }
  return rank_nullspace(stacked).kernel;
}

}  // namespace bihom
