//
// Copyright 2026 The GFDP Authors
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
//

#ifndef GFDP_CLI_H_
#define GFDP_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace gfdp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitVerification = 3;

// Entry point behind the `gfdp` binary. `args` excludes the program name.
// Subcommands: factorize, bounds, simulate, verify, compare.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace gfdp

#endif  // GFDP_CLI_H_
