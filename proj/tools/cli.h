// Copyright 2026 The arcdiag Authors.
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

// Command-line front end. Exit codes: 0 success, 1 malformed input,
// 2 domain constraint violated, 3 work cap exceeded.

#ifndef ARCDIAG_TOOLS_CLI_H_
#define ARCDIAG_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "arcdiag/error.h"

namespace arcdiag::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitDomain = 2,
  kExitCap = 3,
};

ExitCode ExitCodeFor(ErrorCode code);

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcdiag::cli

#endif  // ARCDIAG_TOOLS_CLI_H_
