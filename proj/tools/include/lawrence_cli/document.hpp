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


#ifndef LAWRENCE_CLI_DOCUMENT_HPP_
#define LAWRENCE_CLI_DOCUMENT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "lawrence/arrangement.hpp"
#include "lawrence/ehrhart.hpp"
#include "lawrence/report.hpp"
#include "lawrence/verification.hpp"
#include "lawrence_cli/input.hpp"

namespace lawrence::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& x);
Json integers_json(std::span<const Integer> xs);
Json rationals_json(std::span<const Rational> xs);
/// Sets obj[key] to the coefficient array and obj[key + "_text"] to the
/// ascending display form.
void put_polynomial(Json& obj, const std::string& key, const IntPolynomial& p);

Json header(const std::string& command);
Json config_json(const Config& c);
Json input_json(const Input& in);

Json matroid_json(const Config& c, std::span<const FlatData> flats, bool bounded);
Json boxes_json(const Config& c, std::span<const FlatData> flats);

struct ArrangementInfo {
  Arrangement arrangement;
  bool from_input = false;
  bool regenerated = false;
  std::uint64_t seed = 0;
};
ArrangementInfo arrangement_info(const Input& in, std::uint64_t seed);
Json census_json(const Arrangement& arr, const Guards& guards);
Json arrangement_json(const ArrangementInfo& info, const Guards& guards);

Json checks_json(std::span<const CheckResult> checks);
Json case_json(const CaseReport& r);

/// "pass" when no check failed.
std::string status_of(std::span<const CheckResult> checks);

}  // namespace lawrence::cli

#endif  // LAWRENCE_CLI_DOCUMENT_HPP_
