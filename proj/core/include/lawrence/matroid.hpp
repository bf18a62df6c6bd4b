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

#ifndef LAWRENCE_MATROID_HPP_
#define LAWRENCE_MATROID_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lawrence/exact.hpp"
#include "lawrence/polynomial.hpp"

namespace lawrence {

inline constexpr std::size_t kDefaultMaxSubsetElements = 16;

/// An indexed configuration of nonzero vectors b_i = a_i * v_i in Z^rank,
/// v_i primitive. Configurations built by `validate_config` generate Z^rank.
struct Config {
  std::size_t rank = 0;
  std::vector<IntVector> vectors;
  std::vector<Integer> multipliers;    // a_i > 0
  std::vector<IntVector> primitives;   // v_i

  std::size_t size() const { return vectors.size(); }
  /// Matrix with the b_i as columns.
  IntMatrix matrix() const;

  friend bool operator==(const Config&, const Config&) = default;
};

/// Checks the input and computes the primitive decompositions. Throws
/// lawrence::Error with kEmptyConfig, kZeroVector, kDimensionMismatch or
/// kNotGenerating.
Config validate_config(std::size_t rank, std::vector<IntVector> vectors);

/// Builds a Config without the generation check. Vectors must be nonzero.
/// Used for quotient configurations and transformed inputs.
Config make_config(std::size_t rank, std::vector<IntVector> vectors);

/// An element of the matroid: a linearly independent index set (0-based).
/// The empty set stands for the rank-0 element {0}.
struct IndepSet {
  std::vector<std::size_t> indices;
  std::size_t dim = 0;
  std::vector<IntVector> span_basis;  // saturated basis of Z^rank cap span F

  friend bool operator==(const IndepSet&, const IndepSet&) = default;
};

/// Builds the IndepSet for `indices`; throws kInvalidArgument if dependent.
/// "0" for the empty set, otherwise "b2b4" style with 1-based labels.
std::string flat_label(const IndepSet& f);

IndepSet make_indep_set(const Config& c, std::vector<std::size_t> indices);

/// All independent subsets, ordered by size and then lexicographically.
/// Throws kSizeGuard when size() > max_elements.
std::vector<IndepSet> independent_sets(
    const Config& c, std::size_t max_elements = kDefaultMaxSubsetElements);

struct QuotientConfig {
  Config config;                      // images in Z^(rank - dim F)
  std::vector<std::size_t> index_map; // quotient index -> original index
  IntMatrix projection;               // (rank - dim F) x rank
};

/// Images of the vectors outside span F in Z^rank / (Z^rank cap span F).
QuotientConfig quotient_config(const Config& c, const IndepSet& f);

/// True iff b_i lies in the rational span of f.
bool in_span(const Config& c, const IndepSet& f, std::size_t i);

/// f_i = number of elements of dimension i, for i = 0..codim.
std::vector<std::size_t> f_vector(std::span<const IndepSet> sets,
                                  std::size_t codim);

/// sum_i f_i t^i (1 - t)^(codim - i).
IntPolynomial h_polynomial(std::span<const std::size_t> f, std::size_t codim);

bool is_coloop_free(const Config& c);

/// Number of elements of dimension `dim_matroid` (the bases). The rank-0
/// matroid has the single basis {0}.
std::size_t bases_count(std::span<const IndepSet> sets, std::size_t dim_matroid);

}  // namespace lawrence

#endif  // LAWRENCE_MATROID_HPP_
