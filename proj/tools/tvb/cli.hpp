// Copyright 2026 The tvb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TVB_TOOLS_CLI_HPP
#define TVB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tvb::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kInternalError = 2,
  kNegativeVerdict = 3,  // only with --strict
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace tvb::cli

#endif  // TVB_TOOLS_CLI_HPP
