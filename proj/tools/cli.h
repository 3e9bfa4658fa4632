// Copyright 2026 The sdpsieve Authors
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

#ifndef SDPSIEVE_TOOLS_CLI_H_
#define SDPSIEVE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sdpsieve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInfeasible = 10;
inline constexpr int kExitRecoveryFailed = 11;
inline constexpr int kExitIterationLimit = 12;

// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sdpsieve::cli

#endif  // SDPSIEVE_TOOLS_CLI_H_
