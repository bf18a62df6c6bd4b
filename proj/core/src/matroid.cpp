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

#include "lawrence/matroid.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lawrence/error.hpp"

namespace lawrence {

IntMatrix Config::matrix() const {
  return IntMatrix::from_columns(vectors, rank);
}

Config make_config(std::size_t rank, std::vector<IntVector> vectors) {
  Config c;
  c.rank = rank;
  c.vectors = std::move(vectors);
  for (std::size_t i = 0; i < c.vectors.size(); ++i) {
    const IntVector& b = c.vectors[i];
    if (b.size() != rank) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector " + std::to_string(i + 1) + " has length " +
                      std::to_string(b.size()) + ", expected " +
                      std::to_string(rank));
    }
    Integer g = content(b);
    if (g == 0) {
      throw Error(ErrorCode::kZeroVector,
                  "vector " + std::to_string(i + 1) + " is zero");
    }
    IntVector v(rank);
    for (std::size_t k = 0; k < rank; ++k) v[k] = b[k] / g;
    c.multipliers.push_back(g);
    c.primitives.push_back(std::move(v));
  }
  return c;
}

Config validate_config(std::size_t rank, std::vector<IntVector> vectors) {
  if (rank == 0 || vectors.empty()) {
    throw Error(ErrorCode::kEmptyConfig, "need rank >= 1 and at least one vector");
  }
  Config c = make_config(rank, std::move(vectors));
  SmithResult snf = smith_normal_form(c.matrix());
  bool generating = snf.divisors.size() == rank &&
                    std::all_of(snf.divisors.begin(), snf.divisors.end(),
                                [](const Integer& x) { return x == 1; });
  if (!generating) {
    std::string divs;
    for (const auto& x : snf.divisors) divs += (divs.empty() ? "" : ",") + x.get_str();
    throw Error(ErrorCode::kNotGenerating,
                "vectors do not generate Z^" + std::to_string(rank) +
                    " (invariant factors: " + divs + ")");
  }
  return c;
}

namespace {

std::vector<IntVector> select(const Config& c, std::span<const std::size_t> idx) {
  std::vector<IntVector> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(c.vectors[i]);
  return out;
}

std::size_t rank_of(const Config& c, std::span<const std::size_t> idx) {
  if (idx.empty()) return 0;
  return rank(IntMatrix::from_columns(select(c, idx), c.rank));
}

}  // namespace

IndepSet make_indep_set(const Config& c, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i : indices)
    if (i >= c.size()) throw Error(ErrorCode::kInvalidArgument, "index out of range");
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end() ||
      rank_of(c, indices) != indices.size()) {
    throw Error(ErrorCode::kInvalidArgument, "index set is not independent");
  }
  IndepSet f;
  f.dim = indices.size();
  f.span_basis = saturate_span(select(c, indices), c.rank);
  f.indices = std::move(indices);
  return f;
}

std::vector<IndepSet> independent_sets(const Config& c, std::size_t max_elements) {
  if (c.size() > max_elements) {
    throw Error(ErrorCode::kSizeGuard,
                "matroid enumeration over " + std::to_string(c.size()) +
                    " vectors exceeds the bound " + std::to_string(max_elements));
  }
  std::vector<std::vector<std::size_t>> found{{}};
  // Depth-first extension: supersets of dependent sets are dependent.
  std::vector<std::vector<std::size_t>> stack{{}};
  while (!stack.empty()) {
    std::vector<std::size_t> cur = std::move(stack.back());
    stack.pop_back();
    if (cur.size() == c.rank) continue;
    const std::size_t start = cur.empty() ? 0 : cur.back() + 1;
    for (std::size_t i = start; i < c.size(); ++i) {
      std::vector<std::size_t> next = cur;
      next.push_back(i);
      if (rank_of(c, next) != next.size()) continue;
      found.push_back(next);
      stack.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<IndepSet> out;
  out.reserve(found.size());
  for (auto& idx : found) {
    IndepSet f;
    f.dim = idx.size();
    f.span_basis = saturate_span(select(c, idx), c.rank);
    f.indices = std::move(idx);
    out.push_back(std::move(f));
  }
  return out;
}

bool in_span(const Config& c, const IndepSet& f, std::size_t i) {
  std::vector<std::size_t> idx = f.indices;
  idx.push_back(i);
  return rank_of(c, idx) == f.dim;
}

QuotientConfig quotient_config(const Config& c, const IndepSet& f) {
  QuotientConfig q;
  q.projection = quotient_projection(f.span_basis, c.rank);
  std::vector<IntVector> images;
  for (std::size_t i = 0; i < c.size(); ++i) {
    IntVector img = q.projection * c.vectors[i];
    if (is_zero(img)) continue;  // b_i in span F
    images.push_back(std::move(img));
    q.index_map.push_back(i);
  }
  q.config = make_config(c.rank - f.dim, std::move(images));
  return q;
}

std::vector<std::size_t> f_vector(std::span<const IndepSet> sets,
                                  std::size_t codim) {
  std::vector<std::size_t> f(codim + 1, 0);
  for (const auto& s : sets) {
    if (s.dim > codim) {
      throw Error(ErrorCode::kInvalidArgument, "element dimension exceeds codim");
    }
    ++f[s.dim];
  }
  return f;
}

IntPolynomial h_polynomial(std::span<const std::size_t> f, std::size_t codim) {
  if (f.size() > codim + 1) {
    throw Error(ErrorCode::kInvalidArgument, "f-vector longer than codim + 1");
  }
  IntPolynomial h;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    h += Integer(static_cast<unsigned long>(f[i])) *
         one_minus_t_pow(codim - i).shift(i);
  }
  return h;
}

bool is_coloop_free(const Config& c) {
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) all[i] = i;
  const std::size_t full = rank_of(c, all);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (j != i) rest.push_back(j);
    if (rank_of(c, rest) != full) return false;
  }
  return true;
}

std::size_t bases_count(std::span<const IndepSet> sets, std::size_t dim_matroid) {
  return static_cast<std::size_t>(std::count_if(
      sets.begin(), sets.end(),
      [&](const IndepSet& s) { return s.dim == dim_matroid; }));
}

std::string flat_label(const IndepSet& f) {
  if (f.indices.empty()) return "0";
  std::string out;
  for (std::size_t i : f.indices) out += "b" + std::to_string(i + 1);
  return out;
}

}  // namespace lawrence
