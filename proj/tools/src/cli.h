// Copyright 2026 The Friendfoe Authors
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


#ifndef FRIENDFOE_TOOLS_CLI_H_
#define FRIENDFOE_TOOLS_CLI_H_

#include <ostream>

namespace friendfoe::cli {

enum ExitCode : int {
  kExitOk = 0,
  // Bad flags or unreadable inputs. No output files are written.
  kExitParseError = 1,
  // Numerical divergence, or an estimator precondition that the data fails.
  kExitDivergence = 2,
  // The iteration hit max_iter. Partial output is written.
  kExitNotConverged = 3,
};

// Entry point of the friendfoe tool. Returns the process exit code.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace friendfoe::cli

#endif  // FRIENDFOE_TOOLS_CLI_H_
