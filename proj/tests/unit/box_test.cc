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
#include <vector>

#include <gtest/gtest.h>

#include "lawrence/box.hpp"
#include "lawrence/matroid.hpp"
#include "lawrence/random.hpp"
#include "lawrence/sampling.hpp"

namespace lawrence {
namespace {

Config worked_example() { return validate_config(2, {{1, 0}, {0, 1}, {-2, 0}, {2, -1}}); }

TEST(BoxTest, WorkedExample) {
  Config c = worked_example();
  std::vector<BoxPoint> b24 = box_points(c, make_indep_set(c, {1, 3}));
  ASSERT_EQ(b24.size(), 1u);
  EXPECT_EQ(b24[0].w, (IntVector{1, 0}));
  EXPECT_EQ(b24[0].alpha, (RatVector{make_rational(1, 2), make_rational(1, 2)}));
  std::vector<BoxPoint> b3 = box_points(c, make_indep_set(c, {2}));
  ASSERT_EQ(b3.size(), 1u);
  EXPECT_EQ(b3[0].w, (IntVector{-1, 0}));
  EXPECT_EQ(box_count(c, make_indep_set(c, {0})), 0u);
  std::vector<BoxPoint> b0 = box_points(c, make_indep_set(c, {}));
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_EQ(b0[0].w, (IntVector{0, 0}));
  EXPECT_TRUE(b0[0].alpha.empty());
}

TEST(BoxTest, OneDimensional) {
  Config c = validate_config(1, {{1}, {2}});
  std::vector<BoxPoint> b = box_points(c, make_indep_set(c, {1}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].w, (IntVector{1}));
  EXPECT_EQ(box_count(c, make_indep_set(c, {})), 1u);
}

TEST(BoxTest, Lift) {
  Config c = worked_example();
  IndepSet f = make_indep_set(c, {1, 3});
  IntVector l = lift(c, f, box_points(c, f)[0]);
  // sum_j (alpha_j b_j, e_j) = (w, e_2 + e_4).
  EXPECT_EQ(l, (IntVector{1, 0, 0, 1, 0, 1}));
}

// Brute force over the bounding box of the closed parallelepiped, with the
// coefficient test done by Cramer's rule on a basis of the span.
std::vector<IntVector> box_oracle(const Config& c, const IndepSet& f) {
  const std::size_t d = c.rank;
  std::vector<IntVector> out;
  if (f.indices.empty()) return {IntVector(d)};
  IntVector lo(d), hi(d);
  for (std::size_t i : f.indices)
    for (std::size_t k = 0; k < d; ++k) {
      if (c.vectors[i][k] < 0) lo[k] += c.vectors[i][k];
      if (c.vectors[i][k] > 0) hi[k] += c.vectors[i][k];
    }
  std::vector<IntVector> cols;
  for (std::size_t i : f.indices) cols.push_back(c.vectors[i]);
  IntMatrix a = IntMatrix::from_columns(cols, d);
  IntVector p = lo;
  while (true) {
    auto x = solve_rational(a, RatVector(p.begin(), p.end()));
    if (x && std::all_of(x->begin(), x->end(),
                         [](const Rational& q) { return q > 0 && q < 1; }))
      out.push_back(p);
    std::size_t k = 0;
    while (k < d && p[k] == hi[k]) p[k] = lo[k], ++k;
    if (k == d) break;
    ++p[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(BoxProperties, RandomConfigurations) {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    Config c = random_config(rng);
    for (const auto& f : independent_sets(c)) {
      std::vector<BoxPoint> pts = box_points(c, f);
      std::vector<IntVector> ws;
      IntVector total(c.rank);
      for (std::size_t i : f.indices)
        for (std::size_t k = 0; k < c.rank; ++k) total[k] += c.vectors[i][k];
      for (const auto& p : pts) {
        ws.push_back(p.w);
        // Coefficients reconstruct w and lie strictly inside (0, 1).
        RatVector sum(c.rank);
        for (std::size_t j = 0; j < f.indices.size(); ++j) {
          ASSERT_GT(p.alpha[j], 0);
          ASSERT_LT(p.alpha[j], 1);
          for (std::size_t k = 0; k < c.rank; ++k)
            sum[k] += p.alpha[j] * c.vectors[f.indices[j]][k];
        }
        ASSERT_EQ(sum, RatVector(p.w.begin(), p.w.end()));
        // Inversion w -> sum b - w stays in the box.
        IntVector inv(c.rank);
        for (std::size_t k = 0; k < c.rank; ++k) inv[k] = total[k] - p.w[k];
        bool found = false;
        for (const auto& q : pts) found = found || q.w == inv;
        ASSERT_TRUE(found);
      }
      ASSERT_TRUE(std::is_sorted(ws.begin(), ws.end()));
      ASSERT_EQ(ws, box_oracle(c, f));
      if (f.indices.size() == 1) {
        ASSERT_EQ(Integer(pts.size()), c.multipliers[f.indices[0]] - 1);
      }
    }
  }
}

}  // namespace
}  // namespace lawrence
