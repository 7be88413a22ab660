//
// Copyright 2026 The dmcag Authors
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
//

#ifndef DMCAG_TOOLS_CLI_HPP
#define DMCAG_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dmcag::cli {

// Exit codes, a stable contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;   // claim falsified or fixture mismatch
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).  Regular output
/// goes to out unless --out is given, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dmcag::cli

#endif // DMCAG_TOOLS_CLI_HPP
