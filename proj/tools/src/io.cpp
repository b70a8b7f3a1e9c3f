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
#include "bihom_cli/io.hpp"

#include <fstream>
#include <sstream>

#include "bihom/errors.hpp"

namespace bihom::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::string field(const std::string& where, const char* key) {
  return where + "." + key;
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != n) {
    fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

void read_tensor(const Json& j, std::size_t depth, std::size_t in_dim, std::size_t out_dim,
                 const std::string& where, Vector& out) {
  if (depth == 0) {
    array_of(j, out_dim, where);
    for (std::size_t k = 0; k < out_dim; ++k) out.push_back(rational_from_json(j[k], at(where, k)));
    return;
  }
  array_of(j, in_dim, where);
  for (std::size_t i = 0; i < in_dim; ++i) read_tensor(j[i], depth - 1, in_dim, out_dim, at(where, i), out);
}

Json write_tensor(const Vector& data, std::size_t& pos, std::size_t depth, std::size_t in_dim,
                  std::size_t out_dim) {
  Json arr = Json::array();
  if (depth == 0) {
    for (std::size_t k = 0; k < out_dim; ++k) arr.push_back(rational_to_json(data[pos++]));
    return arr;
  }
  for (std::size_t i = 0; i < in_dim; ++i) {
    arr.push_back(write_tensor(data, pos, depth - 1, in_dim, out_dim));
  }
  return arr;
}

std::vector<Matrix> matrices_from_json(const Json& j, std::size_t count, std::size_t n,
                                       const std::string& where) {
  array_of(j, count, where);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from_json(j[i], n, n, at(where, i)));
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational literal string like \"-3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& where) {
  array_of(j, rows, where);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    array_of(j[r], cols, at(where, r));
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rational_from_json(j[r][c], at(at(where, r), c));
    }
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json arr = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    arr.push_back(std::move(row));
  }
  return arr;
}

Multilinear tensor_from_json(const Json& j, std::size_t arity, std::size_t in_dim,
                             std::size_t out_dim, const std::string& where) {
  Vector coords;
  read_tensor(j, arity, in_dim, out_dim, where, coords);
  return Multilinear::from_coordinates(arity, in_dim, out_dim, std::move(coords));
}

Json tensor_to_json(const Multilinear& f) {
  std::size_t pos = 0;
  return write_tensor(f.coordinates(), pos, f.arity(), f.in_dim(), f.out_dim());
}

BiHomAlgebra algebra_from_json(const Json& j, const std::string& where) {
  const std::string root = where + ": $";
  const std::size_t n = size_from_json(require(j, "dim", root), field(root, "dim"));
  Multilinear mu = tensor_from_json(require(j, "mu", root), 2, n, n, field(root, "mu"));
  Matrix alpha = matrix_from_json(require(j, "alpha", root), n, n, field(root, "alpha"));
  Matrix beta = matrix_from_json(require(j, "beta", root), n, n, field(root, "beta"));
  return BiHomAlgebra(std::move(mu), std::move(alpha), std::move(beta));
}

Json algebra_to_json(const BiHomAlgebra& alg) {
  Json j;
  j["dim"] = alg.dim();
  j["mu"] = tensor_to_json(alg.mu());
  j["alpha"] = matrix_to_json(alg.alpha());
  j["beta"] = matrix_to_json(alg.beta());
  return j;
}

Representation representation_from_json(const Json& j, const std::string& where) {
  const std::string root = where + ": $";
  const std::size_t n = size_from_json(require(j, "alg_dim", root), field(root, "alg_dim"));
  const std::size_t m = size_from_json(require(j, "mod_dim", root), field(root, "mod_dim"));
  auto l = matrices_from_json(require(j, "l", root), n, m, field(root, "l"));
  auto r = matrices_from_json(require(j, "r", root), n, m, field(root, "r"));
  Matrix phi = matrix_from_json(require(j, "phi", root), m, m, field(root, "phi"));
  Matrix psi = matrix_from_json(require(j, "psi", root), m, m, field(root, "psi"));
  return Representation(std::move(l), std::move(r), std::move(phi), std::move(psi));
}

Json representation_to_json(const Representation& rep) {
  Json j;
  j["alg_dim"] = rep.alg_dim();
  j["mod_dim"] = rep.mod_dim();
  Json l = Json::array(), r = Json::array();
  for (const auto& m : rep.l()) l.push_back(matrix_to_json(m));
  for (const auto& m : rep.r()) r.push_back(matrix_to_json(m));
  j["l"] = std::move(l);
  j["r"] = std::move(r);
  j["phi"] = matrix_to_json(rep.phi());
  j["psi"] = matrix_to_json(rep.psi());
  return j;
}

CochainFile cochain_from_json(const Json& j, const std::string& where) {
  const std::string root = where + ": $";
  const std::size_t degree = size_from_json(require(j, "degree", root), field(root, "degree"));
  if (degree < 1 || degree > 4) fail(field(root, "degree"), "degree must be 1..4");
  const std::size_t n = size_from_json(require(j, "alg_dim", root), field(root, "alg_dim"));
  const std::size_t m = size_from_json(require(j, "mod_dim", root), field(root, "mod_dim"));
  CochainFile out{tensor_from_json(require(j, "tensor", root), degree, n, m,
                                   field(root, "tensor")),
                  std::nullopt};
  if (auto it = j.find("target"); it != j.end()) {
    if (!it->is_string() || (*it != "module" && *it != "dual")) {
      fail(field(root, "target"), "expected \"module\" or \"dual\"");
    }
    out.target = it->get<std::string>();
  }
  return out;
}

Json cochain_to_json(const Multilinear& f, const std::optional<std::string>& target) {
  Json j;
  j["degree"] = f.arity();
  j["alg_dim"] = f.in_dim();
  j["mod_dim"] = f.out_dim();
  j["tensor"] = tensor_to_json(f);
  if (target) j["target"] = *target;
  return j;
}

TruncatedDeformation deformation_from_json(const Json& j, const std::string& where) {
  const std::string root = where + ": $";
  BiHomAlgebra alg = algebra_from_json(require(j, "algebra", root), where + " (algebra)");
  const Json& terms = require(j, "terms", root);
  if (!terms.is_array()) fail(field(root, "terms"), "expected an array");
  TruncatedDeformation out{alg, {}};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out.terms.push_back(
        tensor_from_json(terms[i], 2, alg.dim(), alg.dim(), at(field(root, "terms"), i)));
  }
  return out;
}

Json deformation_to_json(const TruncatedDeformation& defm) {
  Json j;
  j["algebra"] = algebra_to_json(defm.alg);
  Json terms = Json::array();
  for (const auto& t : defm.terms) terms.push_back(tensor_to_json(t));
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace bihom::cli
