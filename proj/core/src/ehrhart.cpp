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

#include "lawrence/ehrhart.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "lawrence/error.hpp"

namespace lawrence {

Integer grade(const Config& c, const LatticePoint& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += v[c.rank + i];
  return s;
}

LawrencePolytope lawrence_polytope(const Config& c) {
  LawrencePolytope p;
  p.config = c;
  p.ambient = c.rank + c.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    LatticePoint top(p.ambient), bottom(p.ambient);
    for (std::size_t k = 0; k < c.rank; ++k) top[k] = c.vectors[i][k];
    top[c.rank + i] = 1;
    bottom[c.rank + i] = 1;
    p.vertices.push_back(std::move(top));
    p.vertices.push_back(std::move(bottom));
  }
  std::vector<IntVector> diffs;
  for (std::size_t j = 1; j < p.vertices.size(); ++j) {
    IntVector dv(p.ambient);
    for (std::size_t k = 0; k < p.ambient; ++k)
      dv[k] = p.vertices[j][k] - p.vertices[0][k];
    diffs.push_back(std::move(dv));
  }
  p.dimension = diffs.empty() ? 0 : rank(IntMatrix::from_columns(diffs, p.ambient));
  return p;
}

// ---------------------------------------------------------------------------
// delta from counts

IntPolynomial delta_from_counts(std::span<const Integer> counts) {
  if (counts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no counts supplied");
  }
  const std::size_t total = counts.size() - 1;  // n + d
  std::vector<Integer> delta(total + 1);
  for (std::size_t k = 0; k <= total; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      Integer term = binomial(total, j) * counts[k - j];
      if (j % 2 == 0) {
        delta[k] += term;
      } else {
        delta[k] -= term;
      }
    }
  if (delta[total] != 0) {
    throw Error(ErrorCode::kPolynomialityViolation,
                "convolution at m = " + std::to_string(total) + " is " +
                    delta[total].get_str() + ", expected 0");
  }
  for (std::size_t k = 0; k < total; ++k)
    if (delta[k] < 0) {
      throw Error(ErrorCode::kNegativeDelta,
                  "delta_" + std::to_string(k) + " = " + delta[k].get_str());
    }
  delta.pop_back();
  return IntPolynomial(std::move(delta));
}

IntPolynomial delta_bruteforce(const Config& c, Guards guards) {
  DilateCounter counter(c, guards);
  std::vector<Integer> counts;
  for (std::size_t m = 0; m <= c.rank + c.size(); ++m) counts.push_back(counter.count(m));
  return delta_from_counts(counts);
}

// ---------------------------------------------------------------------------
// The matroid formula

namespace {

IntPolynomial h_of_flat(const Config& c, const IndepSet& f, const Guards& guards,
                        std::vector<std::size_t>* f_out, std::size_t* bases) {
  QuotientConfig q = quotient_config(c, f);
  std::vector<IndepSet> sets = independent_sets(q.config, guards.max_subsets);
  const std::size_t codim = c.rank - f.dim;
  std::vector<std::size_t> fv = f_vector(sets, codim);
  if (bases) *bases = bases_count(sets, codim);
  IntPolynomial h = h_polynomial(fv, codim);
  if (f_out) *f_out = std::move(fv);
  return h;
}

struct BoundedCensus {
  std::vector<std::size_t> f_bd;
  IntPolynomial h_bd;
  std::size_t regions = 0;
  std::size_t vertices = 0;
};

BoundedCensus census_of_flat(const Arrangement& arr, const IndepSet& f,
                             std::size_t codim, const Guards& guards) {
  Arrangement r = restrict(arr, f);
  std::vector<Cell> cells = enumerate_cells(r, guards.max_signvectors);
  BoundedCensus out;
  out.f_bd.assign(codim + 1, 0);
  for (const auto& cell : cells)
    if (cell.bounded) ++out.f_bd[cell.dim];
  out.h_bd = h_bd_polynomial(cells, codim);
  out.regions = bounded_regions_count(cells, codim);
  out.vertices = out.f_bd[0];
  return out;
}

}  // namespace

IntPolynomial delta_from_formula(const Config& c, Guards guards) {
  IntPolynomial delta;
  for (const auto& f : independent_sets(c, guards.max_subsets)) {
    const std::size_t boxes = box_count(c, f);
    if (boxes == 0) continue;
    delta += Integer(boxes) * h_of_flat(c, f, guards, nullptr, nullptr).shift(f.dim);
  }
  return delta;
}

IntPolynomial delta_from_formula_bd(const Config& c, const Arrangement& arr,
                                    Guards guards) {
  IntPolynomial delta;
  for (const auto& f : independent_sets(c, guards.max_subsets)) {
    const std::size_t boxes = box_count(c, f);
    if (boxes == 0) continue;
    delta += Integer(boxes) *
             census_of_flat(arr, f, c.rank - f.dim, guards).h_bd.shift(f.dim);
  }
  return delta;
}

std::string_view method_name(DeltaMethod m) {
  switch (m) {
    case DeltaMethod::kFormula:
      return "formula";
    case DeltaMethod::kBounded:
      return "bounded";
    case DeltaMethod::kBruteforce:
      return "bruteforce";
  }
  return "unknown";
}

std::vector<FlatData> analyze_flats(const Config& c, const Arrangement* arr,
                                    Guards guards) {
  std::vector<FlatData> out;
  for (auto& f : independent_sets(c, guards.max_subsets)) {
    FlatData fd;
    fd.codim = c.rank - f.dim;
    fd.box = box_points(c, f);
    fd.h = h_of_flat(c, f, guards, &fd.f, &fd.bases);
    if (arr != nullptr) {
      BoundedCensus b = census_of_flat(*arr, f, fd.codim, guards);
      fd.f_bd = std::move(b.f_bd);
      fd.h_bd = std::move(b.h_bd);
      fd.bounded_regions = b.regions;
      fd.vertices = b.vertices;
    }
    fd.flat = std::move(f);
    out.push_back(std::move(fd));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

std::vector<CheckResult> closed_form_checks(const Config& c,
                                            const IntPolynomial& delta,
                                            std::span<const FlatData> flats) {
  std::vector<CheckResult> out;
  out.push_back(compare("delta_0 = 1", "1", delta[0].get_str()));

  Integer sum_a = 0;
  for (const auto& a : c.multipliers) sum_a += a;
  out.push_back(compare("delta_1 = sum a_i - d",
                        Integer(sum_a - Integer(c.rank)).get_str(),
                        delta[1].get_str()));

  std::string tail = "0";
  for (std::size_t k = c.rank + 1; k < delta.coefficients().size(); ++k)
    if (delta[k] != 0) tail = "delta_" + std::to_string(k) + " = " + delta[k].get_str();
  out.push_back(compare("delta_k = 0 for k > d", "0", tail));

  Integer top = 0;
  for (const auto& fd : flats) top += Integer(fd.box.size()) * Integer(fd.bounded_regions);
  out.push_back(compare("delta_d = sum #BOX(F) R^bd_F", top.get_str(),
                        delta[c.rank].get_str()));

  std::string negative = "none";
  for (std::size_t k = 0; k < delta.coefficients().size(); ++k)
    if (delta[k] < 0) negative = "delta_" + std::to_string(k);
  out.push_back(compare("coefficients nonnegative", "none", negative));
  return out;
}

std::vector<CheckResult> closed_form_checks(const Config& c,
                                            const IntPolynomial& delta,
                                            const Arrangement& arr, Guards guards) {
  std::vector<FlatData> flats = analyze_flats(c, &arr, guards);
  return closed_form_checks(c, delta, flats);
}

Integer normalized_volume(const IntPolynomial& delta) {
  return delta.evaluate(1).get_num();
}

Integer volume_cross_sum(std::span<const FlatData> flats) {
  Integer s = 0;
  for (const auto& fd : flats) s += Integer(fd.box.size()) * Integer(fd.bases);
  return s;
}

CheckResult volume_check(const IntPolynomial& delta, std::span<const FlatData> flats) {
  return compare("delta(1) = sum #BOX(F) V_F", volume_cross_sum(flats).get_str(),
                 normalized_volume(delta).get_str());
}

// ---------------------------------------------------------------------------
// Interior points through the cell parameterization

std::vector<InteriorPiece> interior_pieces(const Config& c, const Arrangement& arr,
                                           Guards guards) {
  const std::size_t d = c.rank, n = c.size();
  std::vector<InteriorPiece> out;
  for (const auto& f : independent_sets(c, guards.max_subsets)) {
    std::vector<BoxPoint> box = box_points(c, f);
    if (box.empty()) continue;
    Restriction res = restrict_with_chart(arr, f);
    std::vector<Cell> cells = enumerate_cells(res.arrangement, guards.max_signvectors);
    for (const auto& cell : cells) {
      if (!cell.bounded) continue;
      std::vector<Sign> sign = sign_vector(arr, res.to_parent(cell.witness));
      std::vector<bool> in_f(n, false);
      for (std::size_t i : f.indices) {
        in_f[i] = true;
        if (sign[i] != Sign::kZero) {
          throw Error(ErrorCode::kInvalidArgument,
                      "internal: restricted cell leaves the flat");
        }
      }
      // (b_i, e_i) when C lies in H_i-, (0, e_i) when C lies in H_i+; both
      // when C lies in H_i.
      std::vector<LatticePoint> rays;
      LatticePoint base_shift(d + n);
      for (std::size_t i = 0; i < n; ++i) {
        const bool minus = sign[i] != Sign::kPos;
        const bool plus = sign[i] != Sign::kNeg;
        if (minus) {
          LatticePoint r(d + n);
          for (std::size_t k = 0; k < d; ++k) r[k] = c.vectors[i][k];
          r[d + i] = 1;
          if (!in_f[i])
            for (std::size_t k = 0; k < d + n; ++k) base_shift[k] += r[k];
          rays.push_back(std::move(r));
        }
        if (plus) {
          LatticePoint r(d + n);
          r[d + i] = 1;
          if (!in_f[i]) base_shift[d + i] += 1;
          rays.push_back(std::move(r));
        }
      }
      for (const auto& w : box) {
        InteriorPiece piece{f, w, cell.sign, lift(c, f, w), rays};
        for (std::size_t k = 0; k < d + n; ++k) piece.base[k] += base_shift[k];
        out.push_back(std::move(piece));
      }
    }
  }
  return out;
}

namespace {

// Ray coefficient vectors summing to `left`, applied to `base`; calls
// record(p) for each resulting point. V is IntVector or a vector of int64.
template <typename V, typename Record>
void for_each_combination(const V& base, const std::vector<V>& rays, std::size_t left,
                          Record&& record) {
  using T = typename V::value_type;
  const std::size_t width = base.size();
  if (rays.empty()) {
    if (left == 0) record(base);
    return;
  }
  V v = base;
  auto rec = [&](auto&& self, std::size_t r, std::size_t rest) -> void {
    if (r + 1 == rays.size()) {
      V p = v;
      for (std::size_t k = 0; k < width; ++k) p[k] += T(rest) * rays[r][k];
      record(std::move(p));
      return;
    }
    for (std::size_t a = 0; a <= rest; ++a) {
      self(self, r + 1, rest - a);
      for (std::size_t k = 0; k < width; ++k) v[k] += rays[r][k];
    }
    for (std::size_t k = 0; k < width; ++k) v[k] -= T(rest + 1) * rays[r][k];
  };
  rec(rec, 0, left);
}

bool small_enough(std::span<const InteriorPiece> pieces, std::size_t m) {
  if (m > (std::size_t{1} << 20)) return false;
  const Integer limit = Integer(1) << 24;
  for (const auto& piece : pieces) {
    for (const auto& x : piece.base)
      if (abs(x) > limit) return false;
    for (const auto& r : piece.rays)
      for (const auto& x : r)
        if (abs(x) > limit) return false;
  }
  return true;
}

std::vector<std::int64_t> to_small(const IntVector& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].get_si();
  return out;
}

}  // namespace

InteriorPoints interior_points(const Config& c, std::span<const InteriorPiece> pieces,
                               std::size_t m, const DilateCounter& oracle) {
  const std::size_t d = c.rank;
  InteriorPoints out;
  if (small_enough(pieces, m) && oracle.has_small_rows()) {
    using Small = std::vector<std::int64_t>;
    std::vector<Small> found;
    for (const auto& piece : pieces) {
      const Integer g = grade(c, piece.base);
      if (g > Integer(m)) continue;
      std::vector<Small> rays;
      for (const auto& r : piece.rays) rays.push_back(to_small(r));
      for_each_combination(to_small(piece.base), rays, Integer(Integer(m) - g).get_ui(),
                           [&](Small p) {
                             std::int64_t gp = 0;
                             for (std::size_t k = d; k < p.size(); ++k) gp += p[k];
                             if (gp != static_cast<std::int64_t>(m) ||
                                 !oracle.contains_small(p, true)) {
                               ++out.rejected;
                             } else {
                               found.push_back(std::move(p));
                             }
                           });
    }
    std::sort(found.begin(), found.end());
    auto last = std::unique(found.begin(), found.end());
    out.duplicates = static_cast<std::size_t>(found.end() - last);
    found.erase(last, found.end());
    out.points.reserve(found.size());
    for (const auto& p : found) {
      LatticePoint q(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) q[k] = Integer(static_cast<long>(p[k]));
      out.points.push_back(std::move(q));
    }
    return out;
  }

  std::set<LatticePoint> seen;
  for (const auto& piece : pieces) {
    const Integer g = grade(c, piece.base);
    if (g > Integer(m)) continue;
    for_each_combination(piece.base, piece.rays, Integer(Integer(m) - g).get_ui(),
                         [&](LatticePoint p) {
                           if (grade(c, p) != Integer(m) || !oracle.contains(p, true)) {
                             ++out.rejected;
                           } else if (!seen.insert(std::move(p)).second) {
                             ++out.duplicates;
                           }
                         });
  }
  out.points.assign(seen.begin(), seen.end());
  return out;
}

InteriorPoints interior_points(const Config& c, const Arrangement& arr,
                               std::size_t m, Guards guards) {
  DilateCounter oracle(c, guards);
  return interior_points(c, interior_pieces(c, arr, guards), m, oracle);
}

ReciprocityReport reciprocity_check(const Config& c, const IntPolynomial& delta,
                                    const Arrangement& arr, std::size_t m_max,
                                    Guards guards) {
  ReciprocityReport rep;
  if (m_max == 0) return rep;
  const std::size_t total = c.rank + c.size();
  rep.expected =
      series_over_one_minus_t(delta.substitute_reciprocal(total), total, m_max);
  rep.expected[0] = 0;  // the series starts at m = 1
  rep.actual.assign(m_max + 1, 0);
  DilateCounter oracle(c, guards);
  std::vector<InteriorPiece> pieces = interior_pieces(c, arr, guards);
  for (std::size_t m = 1; m <= m_max; ++m) {
    InteriorPoints ip = interior_points(c, pieces, m, oracle);
    rep.actual[m] = Integer(ip.points.size());
    if (!ip.clean()) rep.clean = false;
  }
  return rep;
}

std::vector<LatticePoint> lattice_points_of_P(const Config& c) {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (Integer lambda = 0; lambda <= c.multipliers[i]; ++lambda) {
      LatticePoint p(c.rank + c.size());
      for (std::size_t k = 0; k < c.rank; ++k) p[k] = lambda * c.primitives[i][k];
      p[c.rank + i] = 1;
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult inequality_check(const Config& c, const IntPolynomial& delta) {
  const std::string name = "delta_i <= delta_j for i <= j <= d - i";
  if (!is_coloop_free(c)) return skipped(name, "not applicable: matroid has a coloop");
  const std::size_t d = c.rank;
  std::string violated = "none";
  for (std::size_t i = 0; 2 * i <= d; ++i)
    for (std::size_t j = i; j <= d - i; ++j)
      if (delta[i] > delta[j]) {
        violated = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return compare(name, "none", violated);
      }
  return compare(name, "none", violated);
}

Config orientation_flip(const Config& c, std::span<const int> flips) {
  if (flips.size() != c.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one flip per vector expected");
  }
  std::vector<IntVector> v = c.vectors;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (flips[i] < 0)
      for (auto& x : v[i]) x = -x;
  return make_config(c.rank, std::move(v));
}

bool degree_bound_check(const IntPolynomial& delta, std::size_t d) {
  auto deg = delta.degree();
  return !deg || *deg <= d;
}

}  // namespace lawrence
