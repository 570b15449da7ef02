// Copyright 2026 The nlconv Authors
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

#ifndef NLCONV_TOOLS_CLI_HPP
#define NLCONV_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nlconv::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInvalidArgument = 2,
    kNumericalDomain = 3,
    kDegenerateOutcome = 4,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace nlconv::cli

#endif
