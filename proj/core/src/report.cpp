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

#include "lawrence/report.hpp"

#include <algorithm>
#include <utility>

namespace lawrence {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

CheckResult compare(std::string name, std::string expected, std::string actual) {
  CheckResult r;
  r.name = std::move(name);
  r.status = expected == actual ? CheckStatus::kPass : CheckStatus::kFail;
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  return r;
}

CheckResult skipped(std::string name, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.status = CheckStatus::kSkipped;
  r.detail = std::move(detail);
  return r;
}

bool all_passed(std::span<const CheckResult> checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.failed(); });
}

}  // namespace lawrence
