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

#include "lawrence/arrangement.hpp"
#include "lawrence/ehrhart.hpp"
#include "lawrence/error.hpp"
#include "lawrence/matroid.hpp"
#include "lawrence/random.hpp"
#include "lawrence/sampling.hpp"

namespace lawrence {
namespace {

Config worked_example() { return validate_config(2, {{1, 0}, {0, 1}, {-2, 0}, {2, -1}}); }

Arrangement worked_arrangement() {
  RatVector r;
  for (long x : {0, 0, 2, -1}) r.push_back(make_rational(x));
  return make_arrangement(worked_example(), r);
}

Config standard_basis(std::size_t d) {
  std::vector<IntVector> e(d, IntVector(d));
  for (std::size_t i = 0; i < d; ++i) e[i][i] = 1;
  return validate_config(d, e);
}

std::vector<Integer> counts_of(const Config& c) {
  DilateCounter counter(c);
  std::vector<Integer> out;
  for (std::size_t m = 0; m <= c.rank + c.size(); ++m) out.push_back(counter.count(m));
  return out;
}

const CheckResult* find(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(PolytopeTest, Vertices) {
  LawrencePolytope p = lawrence_polytope(worked_example());
  EXPECT_EQ(p.ambient, 6u);
  EXPECT_EQ(p.vertices.size(), 8u);
  EXPECT_EQ(p.dimension, 5u);
  for (const auto& v : p.vertices) EXPECT_EQ(grade(p.config, v), 1);
}

TEST(CountTest, Examples) {
  DilateCounter worked(worked_example());
  EXPECT_EQ(worked.count(0), 1);
  EXPECT_EQ(worked.count(1), 9);
  DilateCounter square(validate_config(1, {{1}, {1}}));
  for (std::size_t m = 0; m <= 6; ++m) EXPECT_EQ(square.count(m), Integer((m + 1) * (m + 1)));
  EXPECT_EQ(count_lattice_points(worked_example(), 0), 1);
}

TEST(CountTest, InteriorMatchesPointList) {
  DilateCounter worked(worked_example());
  EXPECT_EQ(worked.count(3, true), 0);
  EXPECT_EQ(worked.count(4, true), 4);
  std::vector<LatticePoint> pts = worked.points(4, true);
  EXPECT_EQ(pts.size(), 4u);
  for (const auto& p : pts) {
    EXPECT_TRUE(worked.contains(p, true));
    EXPECT_TRUE(zonotope_fibre_contains(worked_example(), p, true));
  }
}

TEST(CountTest, SizeGuard) {
  Guards g;
  g.max_dilate_fibers = 100;
  DilateCounter c(worked_example(), g);
  EXPECT_NO_THROW(c.count(2));  // 3^4 = 81
  try {
    c.count(3);  // 4^4 = 256
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuard);
  }
}

// The fast counter against the defining feasibility query, point by point
// over a box that contains every fibre.
TEST(CountTest, AgreesWithFibreFeasibility) {
  Rng rng(51);
  SampleOptions small;
  small.max_size = 4;
  small.entry_bound = 2;
  for (int t = 0; t < 25; ++t) {
    Config c = random_config(rng, small);
    DilateCounter counter(c);
    const std::size_t d = c.rank, n = c.size();
    for (std::size_t m = 0; m <= 2; ++m) {
      for (int interior = 0; interior < 2; ++interior) {
        std::vector<LatticePoint> found;
        LatticePoint v(d + n);
        auto walk = [&](auto&& self, std::size_t k) -> void {
          if (k == d + n) {
            Integer g = grade(c, v);
            if (g == Integer(m) && zonotope_fibre_contains(c, v, interior != 0))
              found.push_back(v);
            return;
          }
          const long r = k < d ? 2 * static_cast<long>(m) : static_cast<long>(m);
          for (long x = k < d ? -r : 0; x <= r; ++x) {
            v[k] = x;
            self(self, k + 1);
          }
          v[k] = 0;
        };
        walk(walk, 0);
        std::sort(found.begin(), found.end());
        ASSERT_EQ(counter.points(m, interior != 0), found) << "m = " << m;
        ASSERT_EQ(counter.count(m, interior != 0), Integer(found.size()));
      }
    }
  }
}

TEST(DeltaFromCountsTest, Examples) {
  EXPECT_EQ(delta_from_counts(counts_of(worked_example())), IntPolynomial({1, 3, 4}));
  std::vector<Integer> square;
  for (long m = 0; m <= 3; ++m) square.push_back((m + 1) * (m + 1));
  EXPECT_EQ(delta_from_counts(square), IntPolynomial({1, 1}));
  std::vector<Integer> simplex;
  for (unsigned long m = 0; m <= 5; ++m) simplex.push_back(binomial(m + 4, 4));
  EXPECT_EQ(delta_from_counts(simplex), IntPolynomial({1}));
}

TEST(DeltaFromCountsTest, DetectsBrokenCounts) {
  std::vector<Integer> square{1, 4, 9, 17};
  try {
    delta_from_counts(square);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPolynomialityViolation);
  }
  std::vector<Integer> negative{1, 2, 3, 4};
  try {
    delta_from_counts(negative);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeDelta);
  }
}

TEST(FormulaTest, Examples) {
  EXPECT_EQ(delta_from_formula(worked_example()), IntPolynomial({1, 3, 4}));
  EXPECT_EQ(delta_from_formula_bd(worked_example(), worked_arrangement()),
            IntPolynomial({1, 3, 4}));
  EXPECT_EQ(delta_bruteforce(worked_example()), IntPolynomial({1, 3, 4}));
  for (std::size_t d = 1; d <= 3; ++d) {
    EXPECT_EQ(delta_from_formula(standard_basis(d)), IntPolynomial({1}));
    EXPECT_EQ(delta_bruteforce(standard_basis(d)), IntPolynomial({1}));
  }
  Config two = validate_config(1, {{1}, {2}});
  EXPECT_EQ(delta_from_formula(two), delta_bruteforce(two));
  Config one = validate_config(1, {{1}});
  EXPECT_EQ(delta_from_formula(one), IntPolynomial({1}));
  EXPECT_EQ(delta_from_formula_bd(one, choose_offsets(one, 0)), IntPolynomial({1}));
  Config pair = validate_config(1, {{1}, {1}});
  EXPECT_EQ(delta_from_formula(pair), IntPolynomial({1, 1}));
  EXPECT_EQ(delta_bruteforce(pair), IntPolynomial({1, 1}));
}

TEST(FormulaTest, WorkedExampleTerms) {
  Arrangement arr = worked_arrangement();
  std::vector<FlatData> flats = analyze_flats(worked_example(), &arr);
  ASSERT_EQ(flats.size(), 10u);
  IntPolynomial sum;
  for (const auto& fd : flats) {
    if (fd.box.empty()) continue;
    sum += Integer(fd.box.size()) * fd.h.shift(fd.flat.dim);
  }
  EXPECT_EQ(sum, IntPolynomial({1, 3, 4}));
  EXPECT_EQ(flats[0].h, IntPolynomial({1, 2, 2}));
  EXPECT_EQ(flats[3].h, IntPolynomial({1, 1}));
  EXPECT_EQ(flats[8].h, IntPolynomial({1}));
  EXPECT_EQ(flats[0].f_bd, (std::vector<std::size_t>{5, 6, 2}));
}

TEST(ClosedFormTest, Examples) {
  auto all_pass = [](const Config& c, const Arrangement& arr) {
    std::vector<CheckResult> checks = closed_form_checks(c, delta_from_formula(c), arr);
    return all_passed(checks) && checks.size() == 5;
  };
  EXPECT_TRUE(all_pass(worked_example(), worked_arrangement()));
  Config one = validate_config(1, {{1}});
  EXPECT_TRUE(all_pass(one, choose_offsets(one, 0)));
  Config e3 = standard_basis(3);
  EXPECT_TRUE(all_pass(e3, choose_offsets(e3, 0)));
  std::vector<CheckResult> wrong =
      closed_form_checks(worked_example(), IntPolynomial({1, 2, 4, 1}), worked_arrangement());
  EXPECT_TRUE(find(wrong, "delta_1 = sum a_i - d")->failed());
  EXPECT_TRUE(find(wrong, "delta_k = 0 for k > d")->failed());
  EXPECT_FALSE(find(wrong, "delta_0 = 1")->failed());
}

TEST(VolumeTest, Examples) {
  std::vector<FlatData> flats = analyze_flats(worked_example(), nullptr);
  EXPECT_EQ(normalized_volume(IntPolynomial({1, 3, 4})), 8);
  EXPECT_EQ(volume_cross_sum(flats), 8);
  EXPECT_FALSE(volume_check(IntPolynomial({1, 3, 4}), flats).failed());
  EXPECT_EQ(normalized_volume(delta_from_formula(standard_basis(2))), 1);
  EXPECT_EQ(normalized_volume(delta_from_formula(validate_config(1, {{1}, {1}}))), 2);
}

TEST(InteriorTest, WorkedExample) {
  Config c = worked_example();
  Arrangement arr = worked_arrangement();
  for (std::size_t m = 1; m < 4; ++m) EXPECT_TRUE(interior_points(c, arr, m).points.empty());
  InteriorPoints four = interior_points(c, arr, 4);
  EXPECT_TRUE(four.clean());
  EXPECT_EQ(four.points, DilateCounter(c).points(4, true));
  EXPECT_EQ(four.points.size(), 4u);
}

TEST(InteriorTest, Square) {
  Config pair = validate_config(1, {{1}, {1}});
  InteriorPoints two = interior_points(pair, choose_offsets(pair, 0), 2);
  ASSERT_EQ(two.points.size(), 1u);
  EXPECT_TRUE(two.clean());
}

TEST(ReciprocityTest, Examples) {
  ReciprocityReport r = reciprocity_check(worked_example(), IntPolynomial({1, 3, 4}),
                                          worked_arrangement(), 6);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.actual, (std::vector<Integer>{0, 0, 0, 0, 4, 27, 103}));
  Config e2 = standard_basis(2);
  ReciprocityReport s = reciprocity_check(e2, IntPolynomial({1}), choose_offsets(e2, 0), 6);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.expected, (std::vector<Integer>{0, 0, 0, 0, 1, 4, 10}));
  ReciprocityReport empty = reciprocity_check(e2, IntPolynomial({1}), choose_offsets(e2, 0), 0);
  EXPECT_TRUE(empty.ok());
  ReciprocityReport wrong = reciprocity_check(worked_example(), IntPolynomial({1, 3, 5}),
                                              worked_arrangement(), 6);
  EXPECT_FALSE(wrong.ok());
}

TEST(LatticePointsTest, Examples) {
  Config c = worked_example();
  std::vector<LatticePoint> pts = lattice_points_of_P(c);
  EXPECT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts, DilateCounter(c).points(1));
  std::vector<LatticePoint> two = lattice_points_of_P(validate_config(1, {{2}, {1}}));
  EXPECT_EQ(two, (std::vector<LatticePoint>{{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}, {2, 1, 0}}));
  Config e3 = standard_basis(3);
  std::vector<LatticePoint> verts = lattice_points_of_P(e3);
  std::vector<LatticePoint> expected = lawrence_polytope(e3).vertices;
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(verts, expected);
}

TEST(InequalityTest, Examples) {
  EXPECT_EQ(inequality_check(worked_example(), IntPolynomial({1, 3, 4})).status,
            CheckStatus::kPass);
  Config one = validate_config(1, {{1}});
  IntPolynomial d = delta_from_formula(one);
  CheckResult r = inequality_check(one, d);
  EXPECT_EQ(r.status, CheckStatus::kSkipped);
  EXPECT_NE(r.detail.find("not applicable"), std::string::npos);
  EXPECT_GT(d[0], d[1]);
  EXPECT_EQ(inequality_check(standard_basis(2), IntPolynomial({1})).status,
            CheckStatus::kSkipped);
  Config pair = validate_config(1, {{1}, {1}});
  EXPECT_EQ(inequality_check(pair, IntPolynomial({2, 1})).status, CheckStatus::kFail);
}

TEST(FlipTest, Examples) {
  Config c = worked_example();
  std::vector<int> flip3{1, 1, -1, 1};
  Config f = orientation_flip(c, flip3);
  EXPECT_EQ(f.vectors[2], (IntVector{2, 0}));
  EXPECT_EQ(delta_from_formula(f), IntPolynomial({1, 3, 4}));
  EXPECT_EQ(delta_bruteforce(f), IntPolynomial({1, 3, 4}));
  std::vector<int> all(4, -1), none(4, 1);
  EXPECT_EQ(delta_from_formula(orientation_flip(c, all)), IntPolynomial({1, 3, 4}));
  EXPECT_EQ(orientation_flip(c, none), c);
}

TEST(DegreeTest, Examples) {
  EXPECT_TRUE(degree_bound_check(IntPolynomial({1, 3, 4}), 2));
  EXPECT_TRUE(degree_bound_check(IntPolynomial({1}), 1));
  EXPECT_FALSE(degree_bound_check(IntPolynomial({1, 0, 0, 1}), 2));
}

TEST(EhrhartProperties, ThreeMethodsAgree) {
  Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    Config c = random_config(rng);
    Arrangement arr = choose_offsets(c, static_cast<std::uint64_t>(t));
    IntPolynomial brute = delta_bruteforce(c);
    ASSERT_EQ(delta_from_formula(c), brute);
    ASSERT_EQ(delta_from_formula_bd(c, arr), brute);
    ASSERT_TRUE(degree_bound_check(brute, c.rank));
    std::vector<int> flips(c.size());
    for (auto& s : flips) s = uniform_int(rng, 0, 1) ? 1 : -1;
    ASSERT_EQ(delta_from_formula(orientation_flip(c, flips)), brute);
  }
}

}  // namespace
}  // namespace lawrence
