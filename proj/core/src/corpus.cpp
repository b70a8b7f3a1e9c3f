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
#include "bihom/corpus.hpp"

namespace bihom::corpus {

BiHomAlgebra zero_plane() {
  return BiHomAlgebra(Multilinear(2, 2, 2), Matrix::identity(2), Matrix::identity(2));
}

BiHomAlgebra zero_line() {
  return BiHomAlgebra(Multilinear(2, 1, 1), Matrix::identity(1), Matrix::identity(1));
}

BiHomAlgebra idempotent_line() {
  Multilinear mu(2, 1, 1);
  mu.at({0, 0}, 0) = 1;
  return BiHomAlgebra(std::move(mu), Matrix::identity(1), Matrix::identity(1));
}

BiHomAlgebra dual_numbers() {
  Multilinear mu(2, 2, 2);
  mu.at({0, 0}, 0) = 1;
  mu.at({0, 1}, 1) = 1;
  mu.at({1, 0}, 1) = 1;
  return BiHomAlgebra(std::move(mu), Matrix::identity(2), Matrix::identity(2));
}

BiHomAlgebra twisted_dual_numbers() {
  return yau_twist(dual_numbers(), Matrix::diagonal({1, 2}), Matrix::diagonal({1, 3}));
}

}  // namespace bihom::corpus
