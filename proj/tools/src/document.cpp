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


#include "lawrence_cli/document.hpp"

#include <vector>

#include "lawrence/box.hpp"
#include "lawrence/matroid.hpp"

namespace lawrence::cli {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json integers_json(std::span<const Integer> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_json(x));
  return out;
}

Json rationals_json(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

void put_polynomial(Json& obj, const std::string& key, const IntPolynomial& p) {
  obj[key] = integers_json(p.coefficients());
  obj[key + "_text"] = p.to_string();
}

Json header(const std::string& command) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

Json config_json(const Config& c) {
  Json out;
  out["rank"] = c.rank;
  Json vs = Json::array();
  for (const auto& v : c.vectors) vs.push_back(integers_json(v));
  out["vectors"] = vs;
  out["multipliers"] = integers_json(c.multipliers);
  return out;
}

Json input_json(const Input& in) {
  Json out = config_json(in.config);
  out["offsets"] = in.offsets ? rationals_json(*in.offsets) : Json(nullptr);
  out["seed"] = in.seed;
  return out;
}

namespace {

Json indices_json(const IndepSet& f) {
  Json out = Json::array();
  for (std::size_t i : f.indices) out.push_back(i + 1);
  return out;
}

Json sizes_json(std::span<const std::size_t> xs) {
  Json out = Json::array();
  for (std::size_t x : xs) out.push_back(x);
  return out;
}

}  // namespace

Json matroid_json(const Config& c, std::span<const FlatData> flats, bool bounded) {
  Json out;
  out["size"] = flats.size();
  out["rank"] = c.rank;
  out["coloop_free"] = is_coloop_free(c);
  Json rows = Json::array();
  for (const auto& fd : flats) {
    Json row;
    row["flat"] = flat_label(fd.flat);
    row["indices"] = indices_json(fd.flat);
    row["dim"] = fd.flat.dim;
    row["codim"] = fd.codim;
    row["f"] = sizes_json(fd.f);
    put_polynomial(row, "h", fd.h);
    row["bases"] = fd.bases;
    if (bounded) {
      row["f_bd"] = sizes_json(fd.f_bd);
      put_polynomial(row, "h_bd", fd.h_bd);
      row["bounded_regions"] = fd.bounded_regions;
    }
    rows.push_back(row);
  }
  out["elements"] = rows;
  return out;
}

Json boxes_json(const Config& c, std::span<const FlatData> flats) {
  Json out;
  std::size_t total = 0;
  Json rows = Json::array();
  for (const auto& fd : flats) {
    Json row;
    row["flat"] = flat_label(fd.flat);
    row["count"] = fd.box.size();
    Json pts = Json::array();
    for (const auto& p : fd.box) {
      Json pt;
      pt["w"] = integers_json(p.w);
      pt["alpha"] = rationals_json(p.alpha);
      pt["lift"] = integers_json(lift(c, fd.flat, p));
      pts.push_back(pt);
    }
    row["points"] = pts;
    total += fd.box.size();
    rows.push_back(row);
  }
  out["total"] = total;
  out["elements"] = rows;
  return out;
}

ArrangementInfo arrangement_info(const Input& in, std::uint64_t seed) {
  ArrangementInfo info;
  info.seed = seed;
  info.arrangement = arrangement_for(in.config, in.offsets, seed, &info.regenerated);
  info.from_input = in.offsets.has_value() && !info.regenerated;
  return info;
}

Json census_json(const Arrangement& arr, const Guards& guards) {
  std::vector<Cell> cells = enumerate_cells(arr, guards.max_signvectors);
  std::vector<std::size_t> all(arr.rank + 1), bounded(arr.rank + 1);
  for (const auto& cell : cells) {
    ++all[cell.dim];
    if (cell.bounded) ++bounded[cell.dim];
  }
  Json out;
  out["rank"] = arr.rank;
  out["hyperplanes"] = arr.size();
  out["cells"] = cells.size();
  out["cells_by_dim"] = sizes_json(all);
  out["bounded_by_dim"] = sizes_json(bounded);
  out["regions"] = regions_count(cells, arr.rank);
  out["bounded_regions"] = bounded_regions_count(cells, arr.rank);
  out["vertices"] = all[0];
  put_polynomial(out, "h_bd", h_bd_polynomial(cells, arr.rank));
  return out;
}

Json arrangement_json(const ArrangementInfo& info, const Guards& guards) {
  Json out;
  out["offsets"] = rationals_json(info.arrangement.offsets);
  out["offsets_source"] = info.from_input ? "input" : "seed";
  if (!info.from_input) out["seed"] = info.seed;
  out["regenerated"] = info.regenerated;
  out["simple"] = is_simple(info.arrangement);
  out["census"] = census_json(info.arrangement, guards);
  return out;
}

Json checks_json(std::span<const CheckResult> checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["name"] = c.name;
    row["status"] = std::string(status_name(c.status));
    row["expected"] = c.expected;
    row["actual"] = c.actual;
    row["detail"] = c.detail;
    out.push_back(row);
  }
  return out;
}

std::string status_of(std::span<const CheckResult> checks) {
  return all_passed(checks) ? "pass" : "fail";
}

Json case_json(const CaseReport& r) {
  Json out;
  out["config"] = config_json(r.config);
  out["seed"] = r.seed;
  out["offsets"] = rationals_json(r.arrangement.offsets);
  out["alt_offsets"] = rationals_json(r.alt_arrangement.offsets);
  out["offsets_regenerated"] = r.offsets_regenerated;
  put_polynomial(out, "formula", r.formula);
  put_polynomial(out, "bounded", r.bounded);
  put_polynomial(out, "bruteforce", r.bruteforce);
  Json flips = Json::array();
  for (int s : r.flips) flips.push_back(s);
  out["flips"] = flips;
  out["checks"] = checks_json(r.checks);
  out["status"] = status_of(r.checks);
  return out;
}

}  // namespace lawrence::cli
