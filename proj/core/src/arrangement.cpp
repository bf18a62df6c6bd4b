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

#include "lawrence/arrangement.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lawrence/error.hpp"
#include "lawrence/linear_system.hpp"
#include "lawrence/random.hpp"

namespace lawrence {

char sign_char(Sign s) {
  switch (s) {
    case Sign::kNeg:
      return '-';
    case Sign::kZero:
      return '0';
    case Sign::kPos:
      return '+';
  }
  return '?';
}

std::vector<std::size_t> Cell::zeros() const {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < sign.size(); ++i)
    if (sign[i] == Sign::kZero) z.push_back(i);
  return z;
}

Arrangement make_arrangement(const Config& c, RatVector offsets) {
  if (offsets.size() != c.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(c.size()) + " offsets, got " +
                    std::to_string(offsets.size()));
  }
  Arrangement arr{c.rank, c.vectors, std::move(offsets), {}};
  for (std::size_t i = 0; i < c.size(); ++i) arr.labels.push_back(i);
  return arr;
}

Arrangement choose_offsets(const Config& c, std::uint64_t seed,
                           std::size_t max_rounds) {
  Rng rng(seed);
  std::int64_t bound = 2 * static_cast<std::int64_t>(std::max<std::size_t>(c.size(), 1));
  for (std::size_t round = 0; round < max_rounds; ++round) {
    RatVector offsets;
    for (std::size_t i = 0; i < c.size(); ++i)
      offsets.emplace_back(static_cast<long>(uniform_int(rng, -bound, bound)));
    Arrangement arr = make_arrangement(c, std::move(offsets));
    if (is_simple(arr)) return arr;
    if (bound < (std::int64_t{1} << 60)) bound *= 2;
  }
  throw Error(ErrorCode::kRetryExhausted,
              "no simple offsets found in " + std::to_string(max_rounds) +
                  " rounds");
}

namespace {

IntMatrix rows_of(const Arrangement& arr, std::span<const std::size_t> idx) {
  IntMatrix a(idx.size(), arr.rank);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t k = 0; k < arr.rank; ++k) a(r, k) = arr.normals[idx[r]][k];
  return a;
}

RatVector offsets_of(const Arrangement& arr, std::span<const std::size_t> idx) {
  RatVector b;
  for (std::size_t i : idx) b.push_back(arr.offsets[i]);
  return b;
}

// Calls fn on every subset of {0..n-1} of size <= max_size, as sorted index
// lists; stops early when fn returns false.
template <typename Fn>
bool for_small_subsets(std::size_t n, std::size_t max_size, Fn&& fn) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (!fn(cur)) return false;
    if (cur.size() == max_size) return true;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      if (!self(self, i + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

bool is_simple(const Arrangement& arr) {
  return for_small_subsets(arr.size(), arr.rank + 1, [&](const auto& s) {
    if (s.empty()) return true;
    IntMatrix a = rows_of(arr, s);
    if (rank(a) == s.size()) return true;
    return !is_consistent(a, offsets_of(arr, s));
  });
}

std::vector<Sign> sign_vector(const Arrangement& arr,
                              std::span<const Rational> point) {
  std::vector<Sign> s;
  s.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Rational v = dot(arr.normals[i], point) - arr.offsets[i];
    s.push_back(v < 0 ? Sign::kNeg : (v > 0 ? Sign::kPos : Sign::kZero));
  }
  return s;
}

namespace {

void add_sign_constraint(LinearSystem& sys, const Arrangement& arr,
                         std::size_t i, Sign s) {
  switch (s) {
    case Sign::kNeg:
      sys.add_lt(arr.normals[i], arr.offsets[i]);
      break;
    case Sign::kZero:
      sys.add_equality(arr.normals[i], arr.offsets[i]);
      break;
    case Sign::kPos:
      sys.add_gt(arr.normals[i], arr.offsets[i]);
      break;
  }
}

// The recession cone of the closed cell is {0}.
bool is_bounded(const Arrangement& arr, std::span<const Sign> sign) {
  const std::size_t d = arr.rank;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LinearSystem sys(d);
    for (std::size_t i = 0; i < sign.size(); ++i) {
      switch (sign[i]) {
        case Sign::kNeg:
          sys.add_le(arr.normals[i], 0);
          break;
        case Sign::kZero:
          sys.add_equality(arr.normals[i], 0);
          break;
        case Sign::kPos:
          sys.add_ge(arr.normals[i], 0);
          break;
      }
    }
    IntVector norm(d);
    for (std::size_t k = 0; k < d; ++k) {
      IntVector e(d);
      e[k] = (mask >> k) & 1 ? -1 : 1;
      norm[k] = e[k];
      sys.add_ge(std::move(e), 0);
    }
    sys.add_equality(std::move(norm), 1);
    if (feasible(sys).feasible) return false;
  }
  return true;
}

}  // namespace

std::vector<Cell> enumerate_cells(const Arrangement& arr,
                                  std::size_t max_elements) {
  if (arr.size() > max_elements) {
    throw Error(ErrorCode::kSizeGuard,
                "sign-vector enumeration over " + std::to_string(arr.size()) +
                    " hyperplanes exceeds the bound " +
                    std::to_string(max_elements));
  }
  const std::size_t n = arr.size();
  std::vector<Cell> cells;
  std::vector<Sign> prefix;
  constexpr Sign kOrder[] = {Sign::kNeg, Sign::kZero, Sign::kPos};

  // Depth-first over sign prefixes; an infeasible prefix prunes its subtree.
  auto rec = [&](auto&& self, const LinearSystem& sys, std::size_t zeros) -> void {
    if (prefix.size() == n) {
      Feasibility f = feasible(sys);
      Cell cell;
      cell.sign = prefix;
      if (zeros > arr.rank) {
        throw Error(ErrorCode::kNotSimple, "cell with more zeros than rank");
      }
      std::vector<std::size_t> z = cell.zeros();
      if (!z.empty() && rank(rows_of(arr, z)) != z.size()) {
        throw Error(ErrorCode::kNotSimple, "cell lies on dependent hyperplanes");
      }
      cell.dim = arr.rank - zeros;
      cell.bounded = is_bounded(arr, cell.sign);
      cell.witness = std::move(*f.witness);
      cells.push_back(std::move(cell));
      return;
    }
    const std::size_t i = prefix.size();
    for (Sign s : kOrder) {
      LinearSystem next = sys;
      add_sign_constraint(next, arr, i, s);
      if (!feasible(next).feasible) continue;
      prefix.push_back(s);
      self(self, next, zeros + (s == Sign::kZero ? 1 : 0));
      prefix.pop_back();
    }
  };
  rec(rec, LinearSystem(arr.rank), 0);
  return cells;
}

IntPolynomial h_bd_polynomial(std::span<const Cell> cells, std::size_t codim) {
  std::vector<std::size_t> f(codim + 1, 0);
  for (const auto& c : cells) {
    if (!c.bounded) continue;
    if (c.dim > codim) {
      throw Error(ErrorCode::kInvalidArgument, "cell dimension exceeds codim");
    }
    ++f[c.dim];
  }
  IntPolynomial h;
  for (std::size_t i = 0; i <= codim; ++i) {
    if (f[i] == 0) continue;
    h += Integer(static_cast<unsigned long>(f[i])) * t_minus_one_pow(i);
  }
  return h;
}

std::size_t bounded_regions_count(std::span<const Cell> cells, std::size_t rank) {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(),
      [&](const Cell& c) { return c.bounded && c.dim == rank; }));
}

std::size_t bounded_regions_count(const Arrangement& arr) {
  return bounded_regions_count(enumerate_cells(arr), arr.rank);
}

std::size_t regions_count(std::span<const Cell> cells, std::size_t rank) {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(), [&](const Cell& c) { return c.dim == rank; }));
}

RatVector Restriction::to_parent(std::span<const Rational> z) const {
  RatVector u = origin;
  for (std::size_t r = 0; r < projection.rows(); ++r)
    for (std::size_t k = 0; k < projection.cols(); ++k)
      u[k] += projection(r, k) * z[r];
  return u;
}

IndepSet indep_set_of(const Arrangement& arr, std::vector<std::size_t> indices) {
  return make_indep_set(make_config(arr.rank, arr.normals), std::move(indices));
}

Restriction restrict_with_chart(const Arrangement& arr, const IndepSet& f) {
  Restriction res;
  auto origin = solve_rational(rows_of(arr, f.indices), offsets_of(arr, f.indices));
  if (!origin) throw Error(ErrorCode::kEmptyFlat, "flat of the set is empty");
  res.origin = std::move(*origin);
  res.projection = quotient_projection(f.span_basis, arr.rank);
  res.arrangement.rank = arr.rank - f.dim;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    IntVector img = res.projection * arr.normals[j];
    if (is_zero(img)) continue;
    res.arrangement.normals.push_back(std::move(img));
    res.arrangement.offsets.push_back(arr.offsets[j] -
                                      dot(arr.normals[j], res.origin));
    res.arrangement.labels.push_back(arr.labels[j]);
  }
  if (!is_simple(res.arrangement)) {
    throw Error(ErrorCode::kNotSimple, "restricted arrangement is not simple");
  }
  return res;
}

Arrangement restrict(const Arrangement& arr, const IndepSet& f) {
  return restrict_with_chart(arr, f).arrangement;
}

RegionIdentity zaslavsky_region_identity(const Config& c, const Arrangement& arr,
                                         std::span<const IndepSet> matroid,
                                         const IndepSet& g,
                                         std::span<const std::size_t> i_set,
                                         std::size_t max_elements) {
  std::vector<std::size_t> wanted(i_set.begin(), i_set.end());
  std::sort(wanted.begin(), wanted.end());
  for (std::size_t i : wanted)
    if (i >= c.size() || in_span(c, g, i)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "index " + std::to_string(i + 1) + " lies in span G");
    }

  RegionIdentity out;
  for (const auto& s : matroid) {
    bool contains_g = std::includes(s.indices.begin(), s.indices.end(),
                                    g.indices.begin(), g.indices.end());
    if (!contains_g) continue;
    bool within = std::all_of(s.indices.begin(), s.indices.end(), [&](std::size_t i) {
      return std::binary_search(g.indices.begin(), g.indices.end(), i) ||
             std::binary_search(wanted.begin(), wanted.end(), i);
    });
    if (within) ++out.matroid_count;
  }

  Arrangement flat = restrict(arr, g);
  Arrangement sub{flat.rank, {}, {}, {}};
  for (std::size_t j = 0; j < flat.size(); ++j) {
    if (!std::binary_search(wanted.begin(), wanted.end(), flat.labels[j])) continue;
    sub.normals.push_back(flat.normals[j]);
    sub.offsets.push_back(flat.offsets[j]);
    sub.labels.push_back(flat.labels[j]);
  }
  if (!is_simple(sub)) {
    out.simple = false;
    return out;
  }
  out.regions = regions_count(enumerate_cells(sub, max_elements), sub.rank);
  return out;
}

}  // namespace lawrence
