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

#include "bihom/algebra.hpp"

namespace bihom::corpus {

/// Two-dimensional zero algebra, α = β = Id.
BiHomAlgebra zero_plane();
/// One-dimensional zero algebra e·e = 0, α = β = Id.
BiHomAlgebra zero_line();
/// One-dimensional idempotent algebra e·e = e, α = β = Id.
BiHomAlgebra idempotent_line();
/// Q[x]/(x²) in the basis (1, x), α = β = Id.
BiHomAlgebra dual_numbers();
/// dual_numbers() twisted by diag(1,2), diag(1,3): 1·1 = 1, 1·x = 3x, x·1 = 2x,
/// x·x = 0 with α = diag(1,2), β = diag(1,3).
BiHomAlgebra twisted_dual_numbers();

}  // namespace bihom::corpus
