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


#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "lawrence/error.hpp"
#include "lawrence/matroid.hpp"
#include "lawrence/random.hpp"
#include "lawrence/sampling.hpp"

namespace lawrence {
namespace {

Config worked_example() { return validate_config(2, {{1, 0}, {0, 1}, {-2, 0}, {2, -1}}); }

std::vector<std::vector<std::size_t>> index_sets(const std::vector<IndepSet>& sets) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) out.push_back(s.indices);
  return out;
}

ErrorCode code_of(std::size_t rank, std::vector<IntVector> vectors) {
  try {
    validate_config(rank, std::move(vectors));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(ValidateTest, WorkedExample) {
  Config c = worked_example();
  EXPECT_EQ(c.multipliers, (std::vector<Integer>{1, 1, 2, 1}));
  EXPECT_EQ(c.primitives[2], (IntVector{-1, 0}));
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(content(c.primitives[i]), 1);
    for (std::size_t k = 0; k < 2; ++k)
      EXPECT_EQ(c.multipliers[i] * c.primitives[i][k], c.vectors[i][k]);
  }
}

TEST(ValidateTest, Rejections) {
  EXPECT_EQ(code_of(1, {{2}}), ErrorCode::kNotGenerating);
  EXPECT_EQ(code_of(1, {{0}}), ErrorCode::kZeroVector);
  EXPECT_EQ(code_of(2, {}), ErrorCode::kEmptyConfig);
  EXPECT_EQ(code_of(0, {}), ErrorCode::kEmptyConfig);
  EXPECT_EQ(code_of(2, {{1, 0}, {0}}), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of(2, {{1, 0}, {3, 0}}), ErrorCode::kNotGenerating);
  EXPECT_EQ(code_of(2, {{2, 0}, {0, 1}, {0, 3}}), ErrorCode::kNotGenerating);
}

TEST(IndependentSetsTest, WorkedExample) {
  std::vector<IndepSet> m = independent_sets(worked_example());
  EXPECT_EQ(index_sets(m), (std::vector<std::vector<std::size_t>>{
                               {}, {0}, {1}, {2}, {3}, {0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(m[3].dim, 1u);
  EXPECT_EQ(m[3].span_basis, (std::vector<IntVector>{{1, 0}}));
  EXPECT_EQ(m[0].dim, 0u);
  EXPECT_EQ(flat_label(m[0]), "0");
  EXPECT_EQ(flat_label(m[8]), "b2b4");
}

TEST(IndependentSetsTest, StandardBasisAndParallelPair) {
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<IntVector> e(d, IntVector(d));
    for (std::size_t i = 0; i < d; ++i) e[i][i] = 1;
    EXPECT_EQ(independent_sets(validate_config(d, e)).size(), std::size_t{1} << d);
  }
  EXPECT_EQ(index_sets(independent_sets(validate_config(1, {{1}, {1}}))),
            (std::vector<std::vector<std::size_t>>{{}, {0}, {1}}));
}

TEST(IndependentSetsTest, SizeGuard) {
  std::vector<IntVector> many(6, IntVector{1});
  Config c = validate_config(1, many);
  EXPECT_NO_THROW(independent_sets(c, 6));
  try {
    independent_sets(c, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuard);
  }
}

TEST(QuotientTest, WorkedExample) {
  Config c = worked_example();
  QuotientConfig q3 = quotient_config(c, make_indep_set(c, {2}));
  EXPECT_EQ(q3.config.rank, 1u);
  EXPECT_EQ(q3.index_map, (std::vector<std::size_t>{1, 3}));
  for (const auto& v : q3.config.vectors) EXPECT_FALSE(is_zero(v));
  QuotientConfig q24 = quotient_config(c, make_indep_set(c, {1, 3}));
  EXPECT_EQ(q24.config.rank, 0u);
  EXPECT_TRUE(q24.config.vectors.empty());
  QuotientConfig q0 = quotient_config(c, make_indep_set(c, {}));
  EXPECT_EQ(q0.config.vectors, c.vectors);
  EXPECT_EQ(q0.index_map, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(QuotientTest, ProjectionKillsTheFlat) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    Config c = random_config(rng);
    for (const auto& f : independent_sets(c)) {
      QuotientConfig q = quotient_config(c, f);
      ASSERT_EQ(q.config.rank, c.rank - f.dim);
      for (const auto& b : f.span_basis) ASSERT_TRUE(is_zero(q.projection * b));
      for (std::size_t k = 0; k < q.index_map.size(); ++k) {
        ASSERT_FALSE(in_span(c, f, q.index_map[k]));
        ASSERT_EQ(q.projection * c.vectors[q.index_map[k]], q.config.vectors[k]);
      }
      // Surjective onto Z^(d - dim F).
      if (q.config.rank > 0) {
        for (const auto& dv : smith_normal_form(q.projection).divisors) ASSERT_EQ(dv, 1);
      }
    }
  }
}

TEST(FVectorTest, WorkedExample) {
  Config c = worked_example();
  EXPECT_EQ(f_vector(independent_sets(c), 2), (std::vector<std::size_t>{1, 4, 5}));
  QuotientConfig q3 = quotient_config(c, make_indep_set(c, {2}));
  EXPECT_EQ(f_vector(independent_sets(q3.config), 1), (std::vector<std::size_t>{1, 2}));
  QuotientConfig q24 = quotient_config(c, make_indep_set(c, {1, 3}));
  EXPECT_EQ(f_vector(independent_sets(q24.config), 0), (std::vector<std::size_t>{1}));
}

TEST(HPolynomialTest, WorkedExample) {
  std::vector<std::size_t> f0{1, 4, 5}, f3{1, 2}, f24{1};
  EXPECT_EQ(h_polynomial(f0, 2), IntPolynomial({1, 2, 2}));
  EXPECT_EQ(h_polynomial(f3, 1), IntPolynomial({1, 1}));
  EXPECT_EQ(h_polynomial(f24, 0), IntPolynomial({1}));
}

TEST(ColoopTest, Examples) {
  EXPECT_TRUE(is_coloop_free(worked_example()));
  EXPECT_FALSE(is_coloop_free(validate_config(1, {{1}})));
  EXPECT_TRUE(is_coloop_free(validate_config(1, {{1}, {1}})));
  EXPECT_FALSE(is_coloop_free(validate_config(2, {{1, 0}, {0, 1}})));
}

TEST(BasesTest, WorkedExample) {
  Config c = worked_example();
  EXPECT_EQ(bases_count(independent_sets(c), 2), 5u);
  QuotientConfig q3 = quotient_config(c, make_indep_set(c, {2}));
  EXPECT_EQ(bases_count(independent_sets(q3.config), 1), 2u);
  QuotientConfig q24 = quotient_config(c, make_indep_set(c, {1, 3}));
  EXPECT_EQ(bases_count(independent_sets(q24.config), 0), 1u);
}

TEST(MatroidProperties, HAtOneCountsBases) {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    Config c = random_config(rng);
    for (const auto& f : independent_sets(c)) {
      QuotientConfig q = quotient_config(c, f);
      const std::size_t codim = c.rank - f.dim;
      std::vector<IndepSet> mf = independent_sets(q.config);
      std::vector<std::size_t> fv = f_vector(mf, codim);
      ASSERT_EQ(std::accumulate(fv.begin(), fv.end(), std::size_t{0}), mf.size());
      for (std::size_t i = 0; i < fv.size(); ++i) ASSERT_GT(fv[i], 0u);
      IntPolynomial h = h_polynomial(fv, codim);
      ASSERT_EQ(h[0], 1);
      ASSERT_EQ(h.evaluate(1), Rational(Integer(bases_count(mf, codim))));
    }
  }
}

TEST(MatroidProperties, RelabelingSymmetry) {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    Config c = random_config(rng);
    std::vector<std::size_t> perm(c.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[static_cast<std::size_t>(
                                 uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
    std::vector<IntVector> shuffled(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) shuffled[i] = c.vectors[perm[i]];
    Config p = validate_config(c.rank, shuffled);
    std::vector<std::vector<std::size_t>> mapped;
    for (const auto& s : independent_sets(p)) {
      std::vector<std::size_t> idx;
      for (std::size_t i : s.indices) idx.push_back(perm[i]);
      std::sort(idx.begin(), idx.end());
      mapped.push_back(idx);
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<std::vector<std::size_t>> original = index_sets(independent_sets(c));
    std::sort(original.begin(), original.end());
    ASSERT_EQ(mapped, original);
  }
}

TEST(MatroidProperties, UnimodularBasesMatchH) {
  // Columns of a totally unimodular matrix: every basis has determinant +-1.
  Config c = validate_config(2, {{1, 0}, {0, 1}, {1, 1}, {1, 0}});
  std::vector<IndepSet> m = independent_sets(c);
  std::size_t bases = 0;
  for (const auto& s : m)
    if (s.dim == 2) {
      ++bases;
      IntMatrix b = IntMatrix::from_columns(
          std::vector<IntVector>{c.vectors[s.indices[0]], c.vectors[s.indices[1]]}, 2);
      EXPECT_EQ(abs(determinant(b)), 1);
    }
  EXPECT_EQ(h_polynomial(f_vector(m, 2), 2).evaluate(1), Rational(Integer(bases)));
}

}  // namespace
}  // namespace lawrence
