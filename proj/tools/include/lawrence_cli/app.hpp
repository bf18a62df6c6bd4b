// Copyright 2026 The Authors.
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


#ifndef LAWRENCE_CLI_APP_HPP_
#define LAWRENCE_CLI_APP_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace lawrence::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

struct Environment {
  bool color = false;  // text mode may use ANSI colors
};

/// Runs one command line. `args` excludes the program name. Input documents
/// are read from the named file, or from `in` for "-" or when no file is
/// given (except `verify`, which then samples configurations).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Environment& env = {});

}  // namespace lawrence::cli

#endif  // LAWRENCE_CLI_APP_HPP_
