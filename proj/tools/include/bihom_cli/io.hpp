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

#include <optional>
#include <string>

#include "bihom/algebra.hpp"
#include "bihom/deformation.hpp"
#include "bihom/multilinear.hpp"
#include "bihom/representation.hpp"
#include "json.hpp"

namespace bihom::cli {

// Insertion order is kept so reports serialize deterministically in the
// order they were built.
using Json = nlohmann::ordered_json;

// Every reader takes a location prefix ("file.bha") and reports errors as
// InputError("file.bha: $.alpha[1][0]: ...").

Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& q);

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& where);
Json matrix_to_json(const Matrix& m);

/// Nested arrays of depth arity + 1, innermost = output coordinates.
Multilinear tensor_from_json(const Json& j, std::size_t arity, std::size_t in_dim,
                             std::size_t out_dim, const std::string& where);
Json tensor_to_json(const Multilinear& f);

/// {"dim", "mu", "alpha", "beta"}.
BiHomAlgebra algebra_from_json(const Json& j, const std::string& where);
Json algebra_to_json(const BiHomAlgebra& alg);

/// {"alg_dim", "mod_dim", "l", "r", "phi", "psi"}.
Representation representation_from_json(const Json& j, const std::string& where);
Json representation_to_json(const Representation& rep);

struct CochainFile {
  Multilinear tensor;
  std::optional<std::string> target;  // "module" or "dual" for cocycle files
};

/// {"degree", "alg_dim", "mod_dim", "tensor", optional "target"}.
CochainFile cochain_from_json(const Json& j, const std::string& where);
Json cochain_to_json(const Multilinear& f, const std::optional<std::string>& target = {});

/// {"algebra": <algebra object>, "terms": [tensor, ...]}.
TruncatedDeformation deformation_from_json(const Json& j, const std::string& where);
Json deformation_to_json(const TruncatedDeformation& defm);

}  // namespace bihom::cli
