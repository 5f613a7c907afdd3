// Copyright 2026 The wynerdof Authors
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

#ifndef WYNER_TOOLS_CLI_APP_HPP
#define WYNER_TOOLS_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wyner::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kSizeLimit = 3,
  kVerification = 4,
};

/// Runs one command line; args excludes the program name. Primary output goes
/// to out (or --out), diagnostics and genericity warnings to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wyner::cli

#endif  // WYNER_TOOLS_CLI_APP_HPP
