// Copyright 2026 The edfnorm Authors
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

// Command-line front end. All subcommands are reachable through run(), which
// takes its arguments and streams explicitly so it can be driven from tests.

#ifndef EDFNORM_CLI_H_
#define EDFNORM_CLI_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace edfnorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // a computation failed
inline constexpr int kExitConfigError = 2;  // bad flags, config or input file

// Version string embedded in every output document.
std::string_view version();

// Runs one command. `args` excludes the program name. Results go to `out`
// unless --out names a file; diagnostics go to `err`; `in` is read by the
// `test` subcommand when no input file is given.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace edfnorm::cli

#endif  // EDFNORM_CLI_H_
