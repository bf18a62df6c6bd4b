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


#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lawrence_cli/app.hpp"
#include "lawrence_cli/document.hpp"
#include "lawrence_cli/input.hpp"
#include "lawrence_cli/render.hpp"

namespace lawrence::cli {
namespace {

const std::string kData = LAWRENCE_TEST_DATA;
const std::string kWorked =
    R"({"rank":2,"vectors":[[1,0],[0,1],[-2,0],[2,-1]],"offsets":["0","0","2","-1"]})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_with(std::vector<std::string> args, const std::string& stdin_text = "",
                bool color = false) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Environment env;
  env.color = color;
  int code = run(args, in, out, err, env);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, const std::string& stdin_text, int expected = 0) {
  args.push_back("--format");
  args.push_back("json");
  Result r = run_with(args, stdin_text);
  EXPECT_EQ(r.code, expected) << r.err;
  return Json::parse(r.out);
}

std::string field_of(const std::string& text) {
  try {
    parse_input(text);
  } catch (const InputError& e) {
    return e.field() + "|" + e.code();
  }
  return "ok";
}

TEST(InputTest, WorkedExample) {
  Input s = parse_input(kWorked);
  EXPECT_EQ(s.config.rank, 2u);
  EXPECT_EQ(s.config.size(), 4u);
  ASSERT_TRUE(s.offsets.has_value());
  EXPECT_EQ((*s.offsets)[3], make_rational(-1));
  EXPECT_EQ(s.seed, 0u);
}

TEST(InputTest, Diagnostics) {
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[0]]})"), "vectors[0]|ZeroVector");
  EXPECT_EQ(field_of(R"({"rank":1})"), "vectors|SchemaViolation");
  EXPECT_EQ(field_of(R"({"vectors":[[1]]})"), "rank|SchemaViolation");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1.0]]})"), "vectors[0][0]|SchemaViolation");
  EXPECT_EQ(field_of(R"({"rank":2,"vectors":[[1]]})"), "vectors[0]|DimensionMismatch");
  EXPECT_EQ(field_of(R"({"rank":2,"vectors":[[2,0],[0,1]]})"), "vectors|NotGenerating");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1]],"offsets":[1]})"),
            "offsets[0]|SchemaViolation");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1]],"offsets":["0.5"]})"),
            "offsets[0]|SchemaViolation");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1]],"offsets":["1","2"]})"),
            "offsets|SchemaViolation");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1]],"seed":-1})"), "seed|SchemaViolation");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1]],"extra":0})"), "extra|SchemaViolation");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1]],"guards":{"max_cells":3}})"),
            "guards.max_cells|SchemaViolation");
  EXPECT_EQ(field_of("{\"rank\":1,"), "|MalformedJson");
  EXPECT_EQ(field_of(R"({"rank":1,"vectors":[[1]],"offsets":["3/2"],"seed":4})"), "ok");
}

TEST(InputTest, Guards) {
  Input s = parse_input(
      R"({"rank":1,"vectors":[[1]],"guards":{"max_subsets":3,"max_dilate_fibers":10}})");
  EXPECT_EQ(s.guards.max_subsets, 3u);
  EXPECT_EQ(s.guards.max_dilate_fibers, 10u);
  EXPECT_EQ(s.guards.max_signvectors, Guards{}.max_signvectors);
}

TEST(CliTest, DeltaAllOnWorkedExample) {
  Json doc = run_json({"delta", "--method", "all"}, kWorked);
  EXPECT_EQ(doc["schema_version"], 1);
  ASSERT_EQ(doc["results"].size(), 3u);
  for (const auto& r : doc["results"]) {
    EXPECT_EQ(r["delta_text"], "1 + 3t + 4t^2");
    EXPECT_EQ(r["delta"], Json::parse("[1, 3, 4]"));
  }
  EXPECT_EQ(doc["agree"], true);
  EXPECT_EQ(doc["offsets_source"], "input");
}

TEST(CliTest, SingleMethods) {
  for (const char* m : {"formula", "bounded", "bruteforce"}) {
    Json doc = run_json({"delta", "--method", m}, kWorked);
    ASSERT_EQ(doc["results"].size(), 1u);
    EXPECT_EQ(doc["results"][0]["method"], m);
    EXPECT_EQ(doc["results"][0]["delta_text"], "1 + 3t + 4t^2");
  }
}

TEST(CliTest, InteriorPoints) {
  Json doc = run_json({"points", "--dilate", "4", "--interior"}, kWorked);
  EXPECT_EQ(doc["count"], 4);
  EXPECT_EQ(doc["points"].size(), 4u);
  Json capped = run_json({"points", "--dilate", "2", "--max-display", "5"}, kWorked);
  EXPECT_EQ(capped["count"], 43);
  EXPECT_TRUE(capped["points"].is_null());
}

TEST(CliTest, MatroidAndBoxes) {
  Json m = run_json({"matroid"}, kWorked);
  EXPECT_EQ(m["matroid"]["size"], 10);
  std::set<std::string> seen;
  for (const auto& e : m["matroid"]["elements"]) {
    const std::string f = e["flat"];
    if (f == "0") EXPECT_EQ(e["h_text"], "1 + 2t + 2t^2");
    if (f == "b3") EXPECT_EQ(e["h_text"], "1 + t");
    if (f == "b2b4") EXPECT_EQ(e["h_text"], "1");
    seen.insert(f);
  }
  EXPECT_EQ(seen.size(), 10u);
  Json b = run_json({"boxes"}, kWorked);
  EXPECT_EQ(b["boxes"]["total"], 3);
  for (const auto& e : b["boxes"]["elements"]) {
    if (e["flat"] == "b3") EXPECT_EQ(e["points"][0]["w"], Json::parse("[-1, 0]"));
    if (e["flat"] == "b2b4") EXPECT_EQ(e["points"][0]["w"], Json::parse("[1, 0]"));
  }
}

TEST(CliTest, ArrangementCensus) {
  Json doc = run_json({"arrangement", "--flat", "b3"}, kWorked);
  const Json& c = doc["arrangement"]["census"];
  EXPECT_EQ(c["bounded_by_dim"], Json::parse("[5, 6, 2]"));
  EXPECT_EQ(c["bounded_regions"], 2);
  EXPECT_EQ(c["regions"], 10);
  EXPECT_EQ(doc["restriction"]["census"]["h_bd_text"], "1 + t");
  EXPECT_EQ(run_with({"arrangement", "--flat", "1,3"}, kWorked).code, kExitInvalid);
  EXPECT_EQ(run_with({"arrangement", "--flat", "7"}, kWorked).code, kExitInvalid);
}

TEST(CliTest, VolumeAndValidate) {
  Json v = run_json({"volume"}, kWorked);
  EXPECT_EQ(v["normalized_volume"], 8);
  EXPECT_EQ(v["cross_sum"], 8);
  Json ok = run_json({"validate"}, kWorked);
  EXPECT_EQ(ok["valid"], true);
}

TEST(CliTest, VerifyColoopCase) {
  Json doc = run_json({"verify", "-"}, R"({"rank":1,"vectors":[[1]]})");
  EXPECT_EQ(doc["status"], "pass");
  bool found = false;
  for (const auto& c : doc["case"]["checks"]) {
    if (std::string(c["name"]).rfind("delta_i <= delta_j", 0) != 0) continue;
    found = true;
    EXPECT_EQ(c["status"], "skipped");
    EXPECT_NE(std::string(c["detail"]).find("not applicable"), std::string::npos);
  }
  EXPECT_TRUE(found);
}

TEST(CliTest, VerifyRandom) {
  Json doc = run_json({"verify", "--cases", "3", "--seed", "4", "--nmax", "4"}, "");
  EXPECT_EQ(doc["cases"].size(), 3u);
  EXPECT_EQ(doc["failed"], 0);
  EXPECT_EQ(doc["parameters"]["nmax"], 4);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_with({"validate"}, R"({"rank":1,"vectors":[[0]]})").code, kExitInvalid);
  EXPECT_EQ(run_with({"validate"}, "not json").code, kExitInvalid);
  EXPECT_EQ(run_with({"validate", kData + "/missing.json"}).code, kExitInvalid);
  EXPECT_EQ(run_with({"points", "--dilate", "9", "--max-dilate-fibers", "100"}, kWorked).code,
            kExitInvalid);
  EXPECT_EQ(run_with({"matroid", "--max-subsets", "3"}, kWorked).code, kExitInvalid);
  EXPECT_EQ(run_with({"delta", "--inject-fault"}, kWorked).code, kExitCheckFailed);
  EXPECT_EQ(run_with({"volume", "--inject-fault"}, kWorked).code, kExitCheckFailed);
  EXPECT_EQ(run_with({"verify", "--inject-fault", "-"}, kWorked).code, kExitCheckFailed);
  EXPECT_EQ(run_with({}).code, kExitInvalid);
  EXPECT_EQ(run_with({"--help"}).code, kExitOk);
  EXPECT_EQ(run_with({"report", kData + "/worked_example.json"}).code, kExitOk);
}

TEST(CliTest, ErrorDocument) {
  Result r = run_with({"validate", "--format", "json"}, R"({"rank":1,"vectors":[[0]]})");
  EXPECT_EQ(r.code, kExitInvalid);
  Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["status"], "error");
  EXPECT_EQ(doc["error"]["field"], "vectors[0]");
  EXPECT_EQ(doc["error"]["code"], "ZeroVector");
  EXPECT_NE(r.err.find("vectors[0]"), std::string::npos);
}

TEST(CliTest, ReportIsDeterministic) {
  Result a = run_with({"report", "--format", "json", "--seed", "12"}, kWorked);
  Result b = run_with({"report", "--format", "json", "--seed", "12"}, kWorked);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Result t1 = run_with({"report"}, kWorked);
  Result t2 = run_with({"report"}, kWorked);
  EXPECT_EQ(t1.out, t2.out);
}

void collect(const Json& v, std::set<std::string>& leaves) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      leaves.insert(key);
      collect(value, leaves);
    }
    return;
  }
  leaves.insert(render_leaf(v));
  if (v.is_array())
    for (const auto& x : v) collect(x, leaves);
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = line.find_first_not_of(' ');
  while (i != std::string::npos && i < line.size()) {
    std::size_t j = line.find("  ", i);
    out.push_back(line.substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (j == std::string::npos) break;
    i = line.find_first_not_of(' ', j);
  }
  return out;
}

// Every value printed in text mode is present in the JSON document.
TEST(CliTest, TextValuesAppearInJson) {
  for (const std::string& input : {kWorked, std::string(R"({"rank":1,"vectors":[[1],[2]]})")}) {
    Json doc = run_json({"report"}, input);
    std::set<std::string> leaves;
    collect(doc, leaves);
    Result text = run_with({"report"}, input);
    std::istringstream lines(text.out);
    std::string line;
    std::size_t checked = 0;
    while (std::getline(lines, line)) {
      for (std::string cell : cells(line)) {
        if (!cell.empty() && cell.back() == ':') cell.pop_back();
        EXPECT_TRUE(leaves.count(cell) || leaves.count(cell + "_text")) << "'" << cell << "'";
        ++checked;
      }
    }
    EXPECT_GT(checked, 100u);
  }
}

TEST(CliTest, Color) {
  Result plain = run_with({"volume"}, kWorked, false);
  EXPECT_EQ(plain.out.find('\x1b'), std::string::npos);
  Result color = run_with({"volume"}, kWorked, true);
  EXPECT_NE(color.out.find("\x1b[32mpass\x1b[0m"), std::string::npos);
  Result json = run_with({"volume", "--format", "json"}, kWorked, true);
  EXPECT_EQ(json.out.find('\x1b'), std::string::npos);
}

TEST(CliTest, Timing) {
  Json doc = run_json({"delta", "--timing"}, kWorked);
  EXPECT_TRUE(doc["timing_ms"].contains("bruteforce"));
  Json plain = run_json({"delta"}, kWorked);
  EXPECT_FALSE(plain.contains("timing_ms"));
}

}  // namespace
}  // namespace lawrence::cli
