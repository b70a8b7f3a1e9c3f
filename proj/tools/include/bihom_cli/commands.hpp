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

#include <string>
#include <vector>

namespace bihom::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

struct Outcome {
  int exit_code = kExitPass;
  /// One JSON document {"command", "status", "payload", "diagnostics"}, or
  /// the help text when help was requested.
  std::string output;
};

/// Runs one command. args excludes the program name, e.g.
/// {"cohomology", "--degree", "2", "E1.bha"}.
Outcome run(const std::vector<std::string>& args);

}  // namespace bihom::cli
