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

#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

/// Malformed input: shape or dimension mismatch, unparsable literal.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on data violating its documented precondition
/// (non-invertible twist, incompatible cochain, invalid lower orders, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A named identity failed at a specific basis tuple.
struct Witness {
  std::string identity;
  std::vector<std::size_t> indices;

  std::string describe() const;
};

/// A construction (twist, extension) was rejected because the result does
/// not satisfy the required identities. Carries the failures.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::vector<Witness> witnesses)
      : std::runtime_error(what), witnesses_(std::move(witnesses)) {}

  const std::vector<Witness>& witnesses() const { return witnesses_; }

 private:
  std::vector<Witness> witnesses_;
};

}  // namespace bihom
