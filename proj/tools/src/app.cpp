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


#include "lawrence_cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "lawrence/error.hpp"
#include "lawrence/verification.hpp"
#include "lawrence_cli/document.hpp"
#include "lawrence_cli/input.hpp"
#include "lawrence_cli/render.hpp"

namespace lawrence::cli {

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::optional<std::size_t> max_subsets;
  std::optional<std::size_t> max_signvectors;
  std::optional<std::uint64_t> max_dilate_fibers;
  bool timing = false;
  bool inject_fault = false;
  std::optional<std::uint64_t> seed;
  std::string flat;
  std::string method = "all";
  std::size_t dilate = 0;
  bool interior = false;
  std::size_t max_display = 100;
  std::size_t cases = 50;
  std::size_t dmax = 3;
  std::size_t nmax = 5;
  long entry_bound = 3;
};

class Timer {
 public:
  template <typename F>
  auto time(const std::string& name, F&& f) {
    auto start = std::chrono::steady_clock::now();
    struct Record {
      Timer* t;
      std::string name;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        t->entries_.emplace_back(name, ms.count());
      }
    } rec{this, name, start};
    return f();
  }

  Json json() const {
    Json out;
    for (const auto& [name, ms] : entries_) out[name] = ms;
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::int64_t>> entries_;
};

class Command {
 public:
  Command(const Options& o, std::istream& in) : o_(o), in_(in) {}

  const Input& input() {
    if (!input_) {
      if (o_.input.empty() || o_.input == "-") {
        input_ = read_input(in_);
      } else {
        std::ifstream f(o_.input);
        if (!f) throw InputError("", "Io", "cannot open " + o_.input);
        input_ = read_input(f);
      }
      guards_ = input_->guards;
      if (o_.max_subsets) guards_.max_subsets = *o_.max_subsets;
      if (o_.max_signvectors) guards_.max_signvectors = *o_.max_signvectors;
      if (o_.max_dilate_fibers) guards_.max_dilate_fibers = *o_.max_dilate_fibers;
    }
    return *input_;
  }
  const Config& config() { return input().config; }
  const Guards& guards() {
    input();
    return guards_;
  }
  std::uint64_t seed() { return o_.seed ? *o_.seed : input().seed; }

  Json start(const std::string& name) {
    Json doc = header(name);
    doc["input"] = input_json(input());
    return doc;
  }

  Timer timer;

 private:
  const Options& o_;
  std::istream& in_;
  std::optional<Input> input_;
  Guards guards_;
};

IndepSet parse_flat(const Config& c, const std::string& text) {
  std::vector<std::size_t> idx;
  if (text != "0" && text != "{}") {
    std::string s = text;
    std::replace(s.begin(), s.end(), 'b', ',');
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      std::size_t pos = 0;
      unsigned long i = 0;
      try {
        i = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || i < 1 || i > c.size())
        throw InputError("--flat", "InvalidArgument",
                         "expected 1-based indices such as 2,4 or b2b4, got \"" + text + "\"");
      idx.push_back(i - 1);
    }
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw InputError("--flat", "InvalidArgument", "repeated index");
  try {
    return make_indep_set(c, idx);
  } catch (const Error& e) {
    throw InputError("--flat", std::string(error_name(e.code())), e.what());
  }
}

Json flat_json(const IndepSet& f) {
  Json out;
  out["flat"] = flat_label(f);
  Json idx = Json::array();
  for (std::size_t i : f.indices) idx.push_back(i + 1);
  out["indices"] = idx;
  out["dim"] = f.dim;
  return out;
}

int exit_for(const std::string& status) {
  return status == "fail" ? kExitCheckFailed : kExitOk;
}

// Each command fills `doc` and returns the exit code.
using Handler = std::function<int(Command&, const Options&, Json&)>;

int cmd_validate(Command& cmd, const Options&, Json& doc) {
  doc = cmd.start("validate");
  doc["valid"] = true;
  doc["coloop_free"] = is_coloop_free(cmd.config());
  return kExitOk;
}

int cmd_matroid(Command& cmd, const Options&, Json& doc) {
  doc = cmd.start("matroid");
  auto flats = cmd.timer.time("matroid", [&] {
    return analyze_flats(cmd.config(), nullptr, cmd.guards());
  });
  doc["matroid"] = matroid_json(cmd.config(), flats, false);
  return kExitOk;
}

int cmd_boxes(Command& cmd, const Options&, Json& doc) {
  doc = cmd.start("boxes");
  auto flats = cmd.timer.time("boxes", [&] {
    return analyze_flats(cmd.config(), nullptr, cmd.guards());
  });
  doc["boxes"] = boxes_json(cmd.config(), flats);
  return kExitOk;
}

void note_regenerated(Json& doc, const ArrangementInfo& info) {
  if (info.regenerated)
    doc["note"] = "input offsets are not in general position; regenerated from seed " +
                  std::to_string(info.seed);
}

int cmd_arrangement(Command& cmd, const Options& o, Json& doc) {
  doc = cmd.start("arrangement");
  ArrangementInfo info = arrangement_info(cmd.input(), cmd.seed());
  doc["arrangement"] = cmd.timer.time(
      "arrangement", [&] { return arrangement_json(info, cmd.guards()); });
  note_regenerated(doc, info);
  if (!o.flat.empty()) {
    IndepSet f = parse_flat(cmd.config(), o.flat);
    Json r = flat_json(f);
    r["census"] = cmd.timer.time("restriction", [&] {
      return census_json(restrict(info.arrangement, f), cmd.guards());
    });
    doc["restriction"] = r;
  }
  return kExitOk;
}

int cmd_delta(Command& cmd, const Options& o, Json& doc) {
  doc = cmd.start("delta");
  std::vector<DeltaMethod> methods;
  if (o.method == "formula" || o.method == "all") methods.push_back(DeltaMethod::kFormula);
  if (o.method == "bounded" || o.method == "all") methods.push_back(DeltaMethod::kBounded);
  if (o.method == "bruteforce" || o.method == "all")
    methods.push_back(DeltaMethod::kBruteforce);
  const Config& c = cmd.config();
  Json rows = Json::array();
  std::vector<IntPolynomial> found;
  for (DeltaMethod m : methods) {
    const std::string name(method_name(m));
    IntPolynomial d = cmd.timer.time(name, [&]() -> IntPolynomial {
      switch (m) {
        case DeltaMethod::kFormula:
          return delta_from_formula(c, cmd.guards());
        case DeltaMethod::kBounded: {
          ArrangementInfo info = arrangement_info(cmd.input(), cmd.seed());
          doc["offsets"] = rationals_json(info.arrangement.offsets);
          doc["offsets_source"] = info.from_input ? "input" : "seed";
          if (!info.from_input) doc["seed"] = info.seed;
          note_regenerated(doc, info);
          return delta_from_formula_bd(c, info.arrangement, cmd.guards());
        }
        case DeltaMethod::kBruteforce:
          return delta_bruteforce(c, cmd.guards());
      }
      return IntPolynomial();
    });
    if (o.inject_fault && m == DeltaMethod::kFormula) d += IntPolynomial({1});
    Json row;
    row["method"] = name;
    put_polynomial(row, "delta", d);
    rows.push_back(row);
    found.push_back(d);
  }
  doc["results"] = rows;
  if (found.size() > 1) {
    const bool agree =
        std::all_of(found.begin(), found.end(), [&](const auto& p) { return p == found[0]; });
    doc["agree"] = agree;
    doc["status"] = agree ? "pass" : "fail";
    return agree ? kExitOk : kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_points(Command& cmd, const Options& o, Json& doc) {
  doc = cmd.start("points");
  DilateCounter counter(cmd.config(), cmd.guards());
  Integer n = cmd.timer.time("count", [&] { return counter.count(o.dilate, o.interior); });
  doc["dilate"] = o.dilate;
  doc["interior"] = o.interior;
  doc["count"] = integer_json(n);
  if (n <= Integer(std::to_string(o.max_display))) {
    Json pts = Json::array();
    for (const auto& p : counter.points(o.dilate, o.interior)) pts.push_back(integers_json(p));
    doc["points"] = pts;
  } else {
    doc["points"] = nullptr;
    doc["note"] = "point list omitted above --max-display " + std::to_string(o.max_display);
  }
  return kExitOk;
}

int cmd_volume(Command& cmd, const Options& o, Json& doc) {
  doc = cmd.start("volume");
  const Config& c = cmd.config();
  auto flats = cmd.timer.time("matroid", [&] { return analyze_flats(c, nullptr, cmd.guards()); });
  IntPolynomial d = cmd.timer.time("formula", [&] { return delta_from_formula(c, cmd.guards()); });
  if (o.inject_fault) d += IntPolynomial({1});
  put_polynomial(doc, "delta", d);
  doc["normalized_volume"] = integer_json(normalized_volume(d));
  doc["cross_sum"] = integer_json(volume_cross_sum(flats));
  std::vector<CheckResult> checks{volume_check(d, flats)};
  doc["checks"] = checks_json(checks);
  doc["status"] = status_of(checks);
  return exit_for(doc["status"]);
}

VerifyOptions verify_options(Command& cmd, const Options& o, std::uint64_t seed) {
  VerifyOptions v;
  v.seed = seed;
  v.guards = cmd.guards();
  v.inject_fault = o.inject_fault;
  return v;
}

int cmd_verify(Command& cmd, const Options& o, Json& doc) {
  if (!o.input.empty()) {
    doc = cmd.start("verify");
    CaseReport r = cmd.timer.time("verify", [&] {
      return verify_config(cmd.config(), cmd.input().offsets,
                           verify_options(cmd, o, cmd.seed()));
    });
    doc["case"] = case_json(r);
    doc["status"] = status_of(r.checks);
    return exit_for(doc["status"]);
  }
  doc = header("verify");
  if (o.dmax < 1 || o.nmax < 1 || o.entry_bound < 1)
    throw InputError("", "InvalidArgument", "--dmax, --nmax and --entry-bound must be positive");
  SampleOptions sample;
  sample.max_rank = o.dmax;
  sample.max_size = o.nmax;
  sample.entry_bound = o.entry_bound;
  const std::uint64_t seed = o.seed.value_or(0);
  VerifyOptions v;
  v.inject_fault = o.inject_fault;
  if (o.max_subsets) v.guards.max_subsets = *o.max_subsets;
  if (o.max_signvectors) v.guards.max_signvectors = *o.max_signvectors;
  if (o.max_dilate_fibers) v.guards.max_dilate_fibers = *o.max_dilate_fibers;
  Json params;
  params["cases"] = o.cases;
  params["seed"] = seed;
  params["dmax"] = o.dmax;
  params["nmax"] = o.nmax;
  params["entry_bound"] = o.entry_bound;
  doc["parameters"] = params;
  auto reports = cmd.timer.time("verify", [&] {
    return verify_random(o.cases, seed, sample, v);
  });
  std::size_t failed = 0;
  Json cases = Json::array();
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    cases.push_back(case_json(r));
  }
  doc["cases"] = cases;
  doc["passed"] = reports.size() - failed;
  doc["failed"] = failed;
  doc["status"] = failed ? "fail" : "pass";
  return exit_for(doc["status"]);
}

int cmd_report(Command& cmd, const Options& o, Json& doc) {
  doc = cmd.start("report");
  const Config& c = cmd.config();
  ArrangementInfo info = arrangement_info(cmd.input(), cmd.seed());
  auto flats = cmd.timer.time("matroid", [&] {
    return analyze_flats(c, &info.arrangement, cmd.guards());
  });
  doc["matroid"] = matroid_json(c, flats, true);
  doc["boxes"] = boxes_json(c, flats);
  doc["arrangement"] = cmd.timer.time(
      "arrangement", [&] { return arrangement_json(info, cmd.guards()); });
  note_regenerated(doc, info);
  CaseReport r = cmd.timer.time("verify", [&] {
    return verify_config(c, cmd.input().offsets, verify_options(cmd, o, cmd.seed()));
  });
  Json delta;
  put_polynomial(delta, "formula", r.formula);
  put_polynomial(delta, "bounded", r.bounded);
  put_polynomial(delta, "bruteforce", r.bruteforce);
  delta["agree"] = r.formula == r.bounded && r.bounded == r.bruteforce;
  doc["delta"] = delta;
  Json volume;
  volume["normalized_volume"] = integer_json(normalized_volume(r.formula));
  volume["cross_sum"] = integer_json(volume_cross_sum(flats));
  doc["volume"] = volume;
  Json points;
  points["lattice_points"] = lattice_points_of_P(c).size();
  points["interior_first_dilate"] = c.size();
  points["interior_at_first_dilate"] = integer_json(r.formula[c.rank]);
  doc["points"] = points;
  Json flips = Json::array();
  for (int s : r.flips) flips.push_back(s);
  doc["flips"] = flips;
  doc["checks"] = checks_json(r.checks);
  doc["status"] = status_of(r.checks);
  return exit_for(doc["status"]);
}

Json error_json(const std::string& command, const std::string& code, const std::string& field,
                const std::string& message) {
  Json doc = header(command);
  doc["status"] = "error";
  Json e;
  e["code"] = code;
  if (!field.empty()) e["field"] = field;
  e["message"] = message;
  doc["error"] = e;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Environment& env) {
  CLI::App app{"Ehrhart delta-polynomials of Lawrence polytopes, computed exactly.",
               "lawrence"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool input = true) {
    if (input)
      s->add_option("input", o.input, "Input JSON file, - for standard input");
    s->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    s->add_option("--max-subsets", o.max_subsets, "Guard on the number of vectors for subset enumeration");
    s->add_option("--max-signvectors", o.max_signvectors, "Guard on hyperplanes for cell enumeration");
    s->add_option("--max-dilate-fibers", o.max_dilate_fibers, "Guard on (m + 1)^n in lattice counting");
    s->add_flag("--timing", o.timing, "Append wall-clock timings (not reproducible)");
    s->add_flag("--inject-fault", o.inject_fault)->group("");
  };

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    commands.emplace_back(s, std::move(h));
    return s;
  };

  common(add("validate", "Parse and validate the input", cmd_validate));
  common(add("matroid", "Matroid elements with f- and h-vectors", cmd_matroid));
  common(add("boxes", "Box points per matroid element", cmd_boxes));
  CLI::App* arr = add("arrangement", "Cell census of the arrangement", cmd_arrangement);
  common(arr);
  arr->add_option("--seed", o.seed, "Offset seed when the input has no usable offsets");
  arr->add_option("--flat", o.flat, "Also report the restriction to the span of these 1-based indices");
  CLI::App* del = add("delta", "The delta-polynomial", cmd_delta);
  common(del);
  del->add_option("--method", o.method, "formula, bounded, bruteforce or all")
      ->check(CLI::IsMember({"formula", "bounded", "bruteforce", "all"}));
  del->add_option("--seed", o.seed, "Offset seed for the bounded method");
  CLI::App* pts = add("points", "Lattice points of a dilate", cmd_points);
  common(pts);
  pts->add_option("--dilate", o.dilate, "Dilation factor m")->required();
  pts->add_flag("--interior", o.interior, "Count interior points only");
  pts->add_option("--max-display", o.max_display, "List points only up to this count");
  common(add("volume", "Normalized volume two ways", cmd_volume));
  CLI::App* ver = add("verify", "Run every identity check", cmd_verify);
  common(ver);
  ver->add_option("--seed", o.seed, "Seed for offsets, flips and sampled configurations");
  ver->add_option("--cases", o.cases, "Sampled configurations when no input is given");
  ver->add_option("--dmax", o.dmax, "Largest sampled rank");
  ver->add_option("--nmax", o.nmax, "Largest sampled number of vectors");
  ver->add_option("--entry-bound", o.entry_bound, "Sampled entries lie in [-E, E]");
  CLI::App* rep = add("report", "Everything in one document", cmd_report);
  common(rep);
  rep->add_option("--seed", o.seed, "Offset and flip seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const Handler* handler = nullptr;
  for (const auto& [s, h] : commands)
    if (s == chosen) handler = &h;

  Command cmd(o, in);
  Json doc;
  int code = kExitOk;
  auto fail = [&](int exit_code, const std::string& ecode, const std::string& field,
                  const std::string& message) {
    err << "lawrence " << name << ": " << message << "\n";
    doc = error_json(name, ecode, field, message);
    code = exit_code;
  };
  try {
    code = (*handler)(cmd, o, doc);
  } catch (const InputError& e) {
    fail(kExitInvalid, e.code(), e.field(), e.what());
  } catch (const Error& e) {
    const bool check = e.code() == ErrorCode::kNegativeDelta ||
                       e.code() == ErrorCode::kPolynomialityViolation;
    fail(check ? kExitCheckFailed : kExitInvalid, std::string(error_name(e.code())), "",
         e.what());
  }
  if (o.timing && code != kExitInvalid) doc["timing_ms"] = cmd.timer.json();

  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else if (code != kExitInvalid || doc.value("status", "") != "error") {
    out << render_text(doc, env.color);
  }
  return code;
}

}  // namespace lawrence::cli
