// Copyright 2026 The PORAC Filter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PORAC_CLI_HPP
#define PORAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace porac::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kOracleDisagreement = 3,
};

/// Brute-force evaluation is refused above this n unless --force is given.
inline constexpr int kBruteForceMaxN = 10;

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Subcommands: bounds, value, scan, critical, figure,
/// verify.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace porac::cli

#endif  // PORAC_CLI_HPP
