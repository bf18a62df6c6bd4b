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

#ifndef LAWRENCE_REPORT_HPP_
#define LAWRENCE_REPORT_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lawrence {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view status_name(CheckStatus s);

/// Outcome of one named check, with the compared values rendered as text.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string expected;
  std::string actual;
  std::string detail;

  bool failed() const { return status == CheckStatus::kFail; }
};

/// Pass when expected == actual, fail otherwise.
CheckResult compare(std::string name, std::string expected, std::string actual);
CheckResult skipped(std::string name, std::string detail);

bool all_passed(std::span<const CheckResult> checks);

}  // namespace lawrence

#endif  // LAWRENCE_REPORT_HPP_
