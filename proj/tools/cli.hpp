// Copyright 2026 The maxconv Authors
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

#ifndef MAXCONV_TOOLS_CLI_HPP_
#define MAXCONV_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace maxconv::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kDomainError = 3,
  kCapExceeded = 4,
};

/// Runs one command line (without the program name). `in` is read for the
/// "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace maxconv::cli

#endif  // MAXCONV_TOOLS_CLI_HPP_
