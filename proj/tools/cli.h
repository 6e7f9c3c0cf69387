// Copyright 2026 The splkit Authors.
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


#ifndef SPLKIT_TOOLS_CLI_H_
#define SPLKIT_TOOLS_CLI_H_

#include <ostream>

namespace splkit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitContract = 2;
inline constexpr int kExitOrdering = 3;

// Parses argv and runs one subcommand. Never throws; failures are reported
// on `err` and mapped to the exit codes above.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace splkit::cli

#endif  // SPLKIT_TOOLS_CLI_H_
