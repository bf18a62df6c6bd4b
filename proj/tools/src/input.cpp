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


#include "lawrence_cli/input.hpp"

#include <iterator>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lawrence/error.hpp"

namespace lawrence::cli {

using nlohmann::json;

InputError::InputError(std::string field, std::string code, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message),
      field_(std::move(field)),
      code_(std::move(code)) {}

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& message) {
  throw InputError(field, "SchemaViolation", message);
}

std::uint64_t unsigned_field(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) {
    if (v.is_number_integer()) schema(field, "must be nonnegative");
    schema(field, "expected an unsigned integer");
  }
  return v.get<std::uint64_t>();
}

Integer integer_field(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_number_float()) schema(field, "expected an integer, got a floating-point number");
  schema(field, "expected an integer");
}

Guards parse_guards(const json& g) {
  if (!g.is_object()) schema("guards", "expected an object");
  Guards out;
  for (const auto& [key, value] : g.items()) {
    const std::string field = "guards." + key;
    if (key == "max_subsets")
      out.max_subsets = unsigned_field(value, field);
    else if (key == "max_signvectors")
      out.max_signvectors = unsigned_field(value, field);
    else if (key == "max_dilate_fibers")
      out.max_dilate_fibers = unsigned_field(value, field);
    else
      schema(field, "unknown key");
  }
  return out;
}

}  // namespace

Input parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", "MalformedJson", e.what());
  }
  if (!doc.is_object()) schema("", "top level must be an object");
  static const std::set<std::string> known{"rank", "vectors", "offsets", "seed", "guards"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) schema(key, "unknown key");
  if (!doc.contains("rank")) schema("rank", "missing");
  if (!doc.contains("vectors")) schema("vectors", "missing");

  Input out;
  const std::size_t rank = unsigned_field(doc["rank"], "rank");
  const json& vs = doc["vectors"];
  if (!vs.is_array()) schema("vectors", "expected an array");
  std::vector<IntVector> vectors;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string field = "vectors[" + std::to_string(i) + "]";
    if (!vs[i].is_array()) schema(field, "expected an array of integers");
    if (vs[i].size() != rank)
      throw InputError(field, "DimensionMismatch",
                       "has " + std::to_string(vs[i].size()) + " entries, rank is " +
                           std::to_string(rank));
    IntVector v;
    for (std::size_t j = 0; j < vs[i].size(); ++j)
      v.push_back(integer_field(vs[i][j], field + "[" + std::to_string(j) + "]"));
    if (is_zero(v)) throw InputError(field, "ZeroVector", "zero vectors are not allowed");
    vectors.push_back(std::move(v));
  }
  try {
    out.config = validate_config(rank, std::move(vectors));
  } catch (const Error& e) {
    throw InputError("vectors", std::string(error_name(e.code())), e.what());
  }

  if (doc.contains("offsets")) {
    const json& os = doc["offsets"];
    if (!os.is_array()) schema("offsets", "expected an array of strings");
    if (os.size() != out.config.size())
      schema("offsets", "expected " + std::to_string(out.config.size()) + " entries, got " +
                            std::to_string(os.size()));
    RatVector offsets;
    for (std::size_t i = 0; i < os.size(); ++i) {
      const std::string field = "offsets[" + std::to_string(i) + "]";
      if (!os[i].is_string()) schema(field, "expected a string such as \"-1\" or \"3/2\"");
      std::optional<Rational> r = parse_rational(os[i].get<std::string>());
      if (!r) schema(field, "not an exact rational: \"" + os[i].get<std::string>() + "\"");
      offsets.push_back(*r);
    }
    out.offsets = std::move(offsets);
  }
  if (doc.contains("seed")) out.seed = unsigned_field(doc["seed"], "seed");
  if (doc.contains("guards")) out.guards = parse_guards(doc["guards"]);
  return out;
}

Input read_input(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_input(text);
}

}  // namespace lawrence::cli
