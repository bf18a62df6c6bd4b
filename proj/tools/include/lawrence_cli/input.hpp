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


#ifndef LAWRENCE_CLI_INPUT_HPP_
#define LAWRENCE_CLI_INPUT_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include "lawrence/ehrhart.hpp"
#include "lawrence/exact.hpp"
#include "lawrence/matroid.hpp"

namespace lawrence::cli {

/// Rejected input. `field` is a path such as "vectors[2][0]", empty for
/// document-level problems; `code` is the library error name when the
/// configuration itself was rejected.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, std::string code, const std::string& message);
  const std::string& field() const { return field_; }
  const std::string& code() const { return code_; }

 private:
  std::string field_;
  std::string code_;
};

struct Input {
  Config config;
  std::optional<RatVector> offsets;
  std::uint64_t seed = 0;
  Guards guards;
};

/// {"rank": d, "vectors": [[...], ...], "offsets": ["1/2", ...],
///  "seed": s, "guards": {...}}. Offsets must be strings.
Input parse_input(const std::string& text);
Input read_input(std::istream& in);

}  // namespace lawrence::cli

#endif  // LAWRENCE_CLI_INPUT_HPP_
