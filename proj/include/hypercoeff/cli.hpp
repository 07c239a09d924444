// Copyright 2026 The hypercoeff Authors.
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

// Command-line surface: coeffs, eval, verify, bench, list.
//
// Data goes to `out`, diagnostics to `err`.  Exit codes:
//   0 success, 1 verification finding, 2 validation or parse error,
//   3 numeric failure.

#ifndef HYPERCOEFF_CLI_HPP_
#define HYPERCOEFF_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hypercoeff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hypercoeff

#endif  // HYPERCOEFF_CLI_HPP_
