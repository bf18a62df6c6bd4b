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


#include "lawrence/verification.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lawrence/error.hpp"
#include "lawrence/random.hpp"

namespace lawrence {

namespace {

std::string join(const std::vector<Integer>& v, std::size_t from = 0) {
  std::string out = "[";
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) out += ", ";
    out += v[i].get_str();
  }
  return out + "]";
}

std::string point_label(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p[i].get_str();
  }
  return out + ")";
}

// The bruteforce run can itself detect a broken count.
IntPolynomial bruteforce_or_fail(const std::vector<Integer>& counts,
                                 std::vector<CheckResult>& checks) {
  try {
    IntPolynomial d = delta_from_counts(counts);
    checks.push_back(compare("dilate counts are polynomial", "ok", "ok"));
    return d;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNegativeDelta &&
        e.code() != ErrorCode::kPolynomialityViolation)
      throw;
    checks.push_back(compare("dilate counts are polynomial", "ok", e.what()));
    return IntPolynomial();
  }
}

CheckResult zaslavsky_h(const std::string& name, std::span<const FlatData> flats) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& fd : flats)
    if (fd.h != fd.h_bd) {
      if (bad++ == 0)
        first = flat_label(fd.flat) + ": h = " + fd.h.to_string() +
                ", h_bd = " + fd.h_bd.to_string();
    }
  CheckResult r = compare(name, "0 mismatches", std::to_string(bad) + " mismatches");
  r.detail = first;
  return r;
}

CheckResult region_check(const Config& c, const Arrangement& arr,
                         std::span<const IndepSet> matroid, const IndepSet& g,
                         const std::vector<std::size_t>& i_set, const Guards& guards) {
  std::string label = "regions = matroid interval, G = " + flat_label(g) + ", I = {";
  for (std::size_t k = 0; k < i_set.size(); ++k)
    label += (k ? "," : "") + std::to_string(i_set[k] + 1);
  label += "}";
  try {
    RegionIdentity id =
        zaslavsky_region_identity(c, arr, matroid, g, i_set, guards.max_signvectors);
    if (!id.simple) return skipped(label, "projected arrangement not simple");
    return compare(label, std::to_string(id.matroid_count), std::to_string(id.regions));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSimple) throw;
    return skipped(label, "projected arrangement not simple");
  }
}

// Every (x, mu) with sum mu = m and x in the coordinate bounding box of the
// zonotope, tested by the defining feasibility query.
std::vector<LatticePoint> fibre_points(const Config& c, std::size_t m) {
  const std::size_t d = c.rank, n = c.size();
  std::vector<LatticePoint> out;
  LatticePoint v(d + n);
  auto walk_x = [&](auto&& self, std::size_t k) -> void {
    if (k == d) {
      if (zonotope_fibre_contains(c, v)) out.push_back(v);
      return;
    }
    Integer lo = 0, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer t = c.vectors[i][k] * v[d + i];
      if (t < 0) lo += t;
      if (t > 0) hi += t;
    }
    for (Integer x = lo; x <= hi; ++x) {
      v[k] = x;
      self(self, k + 1);
    }
    v[k] = 0;
  };
  auto walk_mu = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == n) {
      v[d + i] = Integer(left);
      walk_x(walk_x, 0);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      v[d + i] = Integer(k);
      self(self, i + 1, left - k);
    }
  };
  walk_mu(walk_mu, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Arrangement arrangement_for(const Config& c, const std::optional<RatVector>& offsets,
                            std::uint64_t seed, bool* regenerated) {
  if (regenerated) *regenerated = false;
  if (offsets) {
    if (offsets->size() != c.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "one offset per vector expected");
    }
    Arrangement arr = make_arrangement(c, *offsets);
    if (is_simple(arr)) return arr;
    if (regenerated) *regenerated = true;
  }
  return choose_offsets(c, seed);
}

std::uint64_t alternate_seed(std::uint64_t seed) {
  return seed ^ 0x9e3779b97f4a7c15ULL;
}

CaseReport verify_config(const Config& c, const std::optional<RatVector>& offsets,
                         const VerifyOptions& opt) {
  CaseReport rep;
  rep.config = c;
  rep.seed = opt.seed;
  auto& checks = rep.checks;
  const std::size_t n = c.size();
  const std::size_t d = c.rank;

  rep.arrangement = arrangement_for(c, offsets, opt.seed, &rep.offsets_regenerated);
  std::uint64_t alt = alternate_seed(opt.seed);
  rep.alt_arrangement = choose_offsets(c, alt);
  while (rep.alt_arrangement.offsets == rep.arrangement.offsets)
    rep.alt_arrangement = choose_offsets(c, ++alt);

  // The three computations of delta.
  std::vector<FlatData> flats = analyze_flats(c, &rep.arrangement, opt.guards);
  std::vector<FlatData> alt_flats = analyze_flats(c, &rep.alt_arrangement, opt.guards);
  rep.formula = delta_from_formula(c, opt.guards);
  if (opt.inject_fault) rep.formula = rep.formula + IntPolynomial({Integer(1)});
  rep.bounded = delta_from_formula_bd(c, rep.arrangement, opt.guards);
  DilateCounter counter(c, opt.guards);
  std::vector<Integer> counts;
  for (std::size_t m = 0; m <= n + d; ++m) counts.push_back(counter.count(m));
  rep.bruteforce = bruteforce_or_fail(counts, checks);
  const std::string brute = rep.bruteforce.to_string();
  checks.push_back(compare("formula = bruteforce", brute, rep.formula.to_string()));
  checks.push_back(compare("bounded = bruteforce", brute, rep.bounded.to_string()));
  checks.push_back(compare("bounded invariant under offsets", rep.bounded.to_string(),
                           delta_from_formula_bd(c, rep.alt_arrangement, opt.guards)
                               .to_string()));

  const IntPolynomial& delta = rep.bruteforce;
  for (auto& r : closed_form_checks(c, delta, flats)) checks.push_back(std::move(r));
  checks.push_back(compare("delta_1 = f(1) - dim P - 1",
                           Integer(counts[1] - Integer(d + n)).get_str(),
                           delta[1].get_str()));
  checks.push_back(volume_check(delta, flats));
  checks.push_back(compare("deg delta <= d", "true",
                           degree_bound_check(delta, d) ? "true" : "false"));

  checks.push_back(zaslavsky_h("h_F = h^bd_F for every F", flats));
  checks.push_back(zaslavsky_h("h_F = h^bd_F for every F, second offsets", alt_flats));

  const std::size_t m_max = opt.m_max.value_or(n + d + 2);
  ReciprocityReport rec = reciprocity_check(c, delta, rep.arrangement, m_max, opt.guards);
  checks.push_back(compare("interior counts = reciprocal series", join(rec.expected, 1),
                           join(rec.actual, 1)));
  checks.push_back(compare("interior parameterization injective and interior", "true",
                           rec.clean ? "true" : "false"));
  if (m_max >= n) {
    std::vector<Integer> below(rec.actual.begin() + 1, rec.actual.begin() + n);
    bool vanish = std::all_of(below.begin(), below.end(),
                              [](const Integer& x) { return x == 0; });
    checks.push_back(compare("no interior points below m = n", "true",
                             vanish ? "true" : "false"));
    checks.push_back(compare("interior count at m = n is delta_d",
                             delta[d].get_str(), rec.actual[n].get_str()));
  }

  for (std::size_t m = 1; m <= 2; ++m) {
    std::vector<LatticePoint> direct = fibre_points(c, m);
    checks.push_back(compare("counted points = fibre feasibility at m = " + std::to_string(m),
                             std::to_string(direct.size()),
                             direct == counter.points(m) ? std::to_string(direct.size())
                                                         : "different set"));
  }

  std::vector<LatticePoint> explicit_points = lattice_points_of_P(c);
  std::vector<LatticePoint> counted = counter.points(1);
  std::string diff = "none";
  if (explicit_points != counted) {
    std::vector<LatticePoint> sym;
    std::set_symmetric_difference(explicit_points.begin(), explicit_points.end(),
                                  counted.begin(), counted.end(),
                                  std::back_inserter(sym));
    diff = sym.empty() ? "duplicates" : point_label(sym.front());
  }
  checks.push_back(compare("lattice points of P = counted points at m = 1", "none", diff));
  Integer expected_points = 0;
  for (const auto& a : c.multipliers) expected_points += a + 1;
  checks.push_back(compare("#lattice points of P = sum (a_i + 1)",
                           expected_points.get_str(),
                           std::to_string(explicit_points.size())));

  checks.push_back(inequality_check(c, delta));

  Rng rng(opt.seed);
  rep.flips = random_signs(rng, n);
  Config flipped = orientation_flip(c, rep.flips);
  checks.push_back(compare("delta invariant under orientation flip",
                           rep.formula.to_string(),
                           delta_from_formula(flipped, opt.guards).to_string()));

  const bool has_bounded = bounded_regions_count(rep.arrangement) > 0;
  checks.push_back(compare("coloop free iff a bounded region exists",
                           is_coloop_free(c) ? "true" : "false",
                           has_bounded ? "true" : "false"));

  std::vector<IndepSet> matroid = independent_sets(c, opt.guards.max_subsets);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  checks.push_back(
      region_check(c, rep.arrangement, matroid, matroid.front(), all, opt.guards));
  for (std::size_t k = 0; k < opt.region_pairs; ++k) {
    const IndepSet& g = matroid[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(matroid.size()) - 1))];
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_span(c, g, i)) outside.push_back(i);
    checks.push_back(region_check(c, rep.arrangement, matroid, g,
                                  random_subset(rng, outside), opt.guards));
  }
  return rep;
}

std::vector<CaseReport> verify_random(std::size_t cases, std::uint64_t seed,
                                      const SampleOptions& sample,
                                      const VerifyOptions& opt) {
  Rng rng(seed);
  std::vector<CaseReport> out;
  out.reserve(cases);
  for (std::size_t k = 0; k < cases; ++k) {
    Config c = random_config(rng, sample);
    VerifyOptions case_opt = opt;
    case_opt.seed = rng();
    out.push_back(verify_config(c, std::nullopt, case_opt));
  }
  return out;
}

}  // namespace lawrence
