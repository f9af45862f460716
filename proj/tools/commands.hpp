// Copyright 2026 The extfair Authors
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

#ifndef EXTFAIR_TOOLS_COMMANDS_HPP
#define EXTFAIR_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace extfair::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kPropertyViolated = 1,
  kInputError = 2,
  kInternalFailure = 3,
};

/// Runs one command line (args[0] is the program name). Documents go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extfair::cli

#endif  // EXTFAIR_TOOLS_COMMANDS_HPP
