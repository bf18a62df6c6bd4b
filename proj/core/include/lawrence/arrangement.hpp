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

#ifndef LAWRENCE_ARRANGEMENT_HPP_
#define LAWRENCE_ARRANGEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lawrence/exact.hpp"
#include "lawrence/matroid.hpp"
#include "lawrence/polynomial.hpp"

namespace lawrence {

inline constexpr std::size_t kDefaultMaxSignVectorElements = 12;
inline constexpr std::size_t kDefaultOffsetRounds = 64;

/// Co-oriented affine hyperplanes H_i = {u : <u, normal_i> = offset_i} in
/// the dual of Z^rank. `labels` maps positions to indices of the
/// configuration the arrangement came from.
struct Arrangement {
  std::size_t rank = 0;
  std::vector<IntVector> normals;
  RatVector offsets;
  std::vector<std::size_t> labels;

  std::size_t size() const { return normals.size(); }
  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

/// Position of a point relative to H_i: kNeg means <u, b_i> < r_i.
enum class Sign : std::int8_t { kNeg = -1, kZero = 0, kPos = 1 };

char sign_char(Sign s);

struct Cell {
  std::vector<Sign> sign;
  std::size_t dim = 0;
  bool bounded = false;
  RatVector witness;  // satisfies the sign conditions exactly

  std::vector<std::size_t> zeros() const;
};

/// Arrangement with the given offsets; simplicity is not checked.
Arrangement make_arrangement(const Config& c, RatVector offsets);

/// Seeded integer offsets from [-K, K], K = 2n doubling per round, until the
/// arrangement is simple. Throws kRetryExhausted after `max_rounds`.
Arrangement choose_offsets(const Config& c, std::uint64_t seed,
                           std::size_t max_rounds = kDefaultOffsetRounds);

/// Every l-fold intersection is empty or of codimension l. Checked on all
/// dependent subsets of size <= rank + 1 (each dependent set contains a
/// circuit of at most that size).
bool is_simple(const Arrangement& arr);

std::vector<Sign> sign_vector(const Arrangement& arr,
                              std::span<const Rational> point);

/// All nonempty cells, ordered lexicographically by sign vector with
/// - < 0 < +. Throws kSizeGuard when size() > max_elements and kNotSimple if
/// a realizable sign vector has dependent zeros.
std::vector<Cell> enumerate_cells(
    const Arrangement& arr,
    std::size_t max_elements = kDefaultMaxSignVectorElements);

/// sum_i f^bd_i (t - 1)^i over the bounded cells.
IntPolynomial h_bd_polynomial(std::span<const Cell> cells, std::size_t codim);

/// Bounded cells of full dimension.
std::size_t bounded_regions_count(std::span<const Cell> cells, std::size_t rank);
std::size_t bounded_regions_count(const Arrangement& arr);

/// Number of cells of dimension `rank` (all regions).
std::size_t regions_count(std::span<const Cell> cells, std::size_t rank);

/// The arrangement induced on the flat cap_{i in F} H_i together with the
/// affine chart z -> origin + projection^T z back into the parent space.
struct Restriction {
  Arrangement arrangement;
  RatVector origin;
  IntMatrix projection;

  RatVector to_parent(std::span<const Rational> z) const;
};

/// Restriction to the flat of f (indices are positions in `arr`). The
/// coordinates come from the same quotient projection as quotient_config,
/// so hyperplanes are labelled identically. Throws kEmptyFlat or kNotSimple.
Restriction restrict_with_chart(const Arrangement& arr, const IndepSet& f);
Arrangement restrict(const Arrangement& arr, const IndepSet& f);

/// The matroid element of arrangement positions `indices`.
IndepSet indep_set_of(const Arrangement& arr, std::vector<std::size_t> indices);

struct RegionIdentity {
  std::size_t regions = 0;
  std::size_t matroid_count = 0;
  bool simple = true;  // false: the projected arrangement was not simple
};

/// Regions of {H_i restricted to the flat of g : i in i_set} against
/// #{G' in M : g subset G' subset g + i_set}. Throws kInvalidArgument when
/// some i in i_set lies in span g.
RegionIdentity zaslavsky_region_identity(
    const Config& c, const Arrangement& arr, std::span<const IndepSet> matroid,
    const IndepSet& g, std::span<const std::size_t> i_set,
    std::size_t max_elements = kDefaultMaxSignVectorElements);

}  // namespace lawrence

#endif  // LAWRENCE_ARRANGEMENT_HPP_
