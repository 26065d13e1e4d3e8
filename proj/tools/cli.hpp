// Copyright 2026 The uncert Authors
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

#ifndef UNCERT_TOOLS_CLI_HPP_
#define UNCERT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace uncert {

// Entry point behind the `uncert` binary, separated so tests can drive it
// in-process. `args` excludes the program name. Returns the process exit
// code: 0 success, 1 a verified bound is violated, 2 bad input, 3 the
// solver failed to converge.
//
// The environment variable UNCERT_SDP_TOL overrides the default solver
// tolerance of 1e-8 for every subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace uncert

#endif  // UNCERT_TOOLS_CLI_HPP_
