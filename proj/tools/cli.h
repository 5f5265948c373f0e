// Copyright 2026 The resil Authors
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

#ifndef RESIL_TOOLS_CLI_H_
#define RESIL_TOOLS_CLI_H_

#include <ostream>

namespace resil::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // resilient, property fails, certificate rejected
inline constexpr int kUsage = 2;     // bad flags or malformed input files
inline constexpr int kRuntime = 3;

// Runs the `resil` command line. Output that the command produces goes to
// `out` unless redirected with --out; diagnostics go to `err`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace resil::cli

#endif  // RESIL_TOOLS_CLI_H_
