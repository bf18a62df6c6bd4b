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

#ifndef LAWRENCE_EHRHART_HPP_
#define LAWRENCE_EHRHART_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lawrence/arrangement.hpp"
#include "lawrence/box.hpp"
#include "lawrence/exact.hpp"
#include "lawrence/matroid.hpp"
#include "lawrence/polynomial.hpp"
#include "lawrence/report.hpp"

namespace lawrence {

/// Enumeration bounds. Exceeding any of them raises kSizeGuard.
struct Guards {
  std::size_t max_subsets = kDefaultMaxSubsetElements;
  std::size_t max_signvectors = kDefaultMaxSignVectorElements;
  std::uint64_t max_dilate_fibers = 50'000'000;  // bound on (m + 1)^n
};

/// A point of N x Z^n: the first `rank` coordinates lie in N, the last n are
/// the e_i coefficients.
using LatticePoint = IntVector;

/// Sum of the e-coordinates.
Integer grade(const Config& c, const LatticePoint& v);

/// The polytope with vertices (b_i, e_i) and (0, e_i) in Z^(d + n).
struct LawrencePolytope {
  Config config;
  std::size_t ambient = 0;
  std::vector<LatticePoint> vertices;
  std::size_t dimension = 0;  // of the affine span
};

LawrencePolytope lawrence_polytope(const Config& c);

/// Lattice points of dilates of the Lawrence polytope, found by brute force.
///
/// The cone over the polytope is {(x, mu) : exists s, 0 <= s <= mu,
/// sum s_i b_i = x}. For fixed mu the fibre is a zonotope; its support
/// function in direction u is sum_i max(0, <u, b_i>) mu_i, and it suffices
/// to test u normal to hyperplanes spanned by the configuration. The interior
/// is the same system with every row strict. The configuration must span.
class DilateCounter {
 public:
  explicit DilateCounter(const Config& c, Guards guards = {});
  ~DilateCounter();
  DilateCounter(DilateCounter&&) noexcept;
  DilateCounter& operator=(DilateCounter&&) noexcept;

  /// #(m P cap lattice), or the interior count when `interior`.
  Integer count(std::size_t m, bool interior = false) const;
  /// The same points, sorted lexicographically.
  std::vector<LatticePoint> points(std::size_t m, bool interior = false) const;
  /// Membership of v in the cone (or its interior).
  bool contains(const LatticePoint& v, bool interior = false) const;
  /// Machine-integer rows are available; contains_small is then exact for
  /// coordinates below 2^60 in absolute value.
  bool has_small_rows() const;
  bool contains_small(std::span<const std::int64_t> v, bool interior = false) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Membership through the defining feasibility query: some s with
/// 0 <= s <= mu (strict for the interior) and sum s_i b_i = x.
bool zonotope_fibre_contains(const Config& c, const LatticePoint& v,
                             bool interior = false);

Integer count_lattice_points(const Config& c, std::size_t m, Guards guards = {});

/// delta_k = sum_j (-1)^j C(D, j) f(k - j), D = counts.size() - 1, for
/// k < D; the value at k = D must vanish. Throws kNegativeDelta or
/// kPolynomialityViolation.
IntPolynomial delta_from_counts(std::span<const Integer> counts);

/// delta_from_counts over f(0..n + d).
IntPolynomial delta_bruteforce(const Config& c, Guards guards = {});

/// sum over F in M of #BOX(F) t^dim F h_F(t).
IntPolynomial delta_from_formula(const Config& c, Guards guards = {});

/// The same sum with h_F replaced by the bounded-cell h-polynomial of the
/// restriction of `arr` to the flat of F.
IntPolynomial delta_from_formula_bd(const Config& c, const Arrangement& arr,
                                    Guards guards = {});

enum class DeltaMethod { kFormula, kBounded, kBruteforce };
std::string_view method_name(DeltaMethod m);

struct DeltaResult {
  IntPolynomial delta;
  DeltaMethod method = DeltaMethod::kFormula;
  std::optional<std::uint64_t> seed;  // offsets provenance (bounded only)
  RatVector offsets;
};

/// Everything the formulas need about one matroid element.
struct FlatData {
  IndepSet flat;
  std::vector<BoxPoint> box;
  std::size_t codim = 0;
  std::vector<std::size_t> f;  // of the quotient matroid M_F
  IntPolynomial h;
  std::size_t bases = 0;       // V_F
  // Filled only when an arrangement is supplied.
  std::vector<std::size_t> f_bd;
  IntPolynomial h_bd;
  std::size_t bounded_regions = 0;  // R^bd_F
  std::size_t vertices = 0;
};

std::vector<FlatData> analyze_flats(const Config& c, const Arrangement* arr,
                                    Guards guards = {});

/// delta_0 = 1, delta_1 = sum a_i - d, delta_k = 0 for k > d,
/// delta_d = sum #BOX(F) R^bd_F, plus coefficient sanity.
std::vector<CheckResult> closed_form_checks(const Config& c,
                                            const IntPolynomial& delta,
                                            std::span<const FlatData> flats);
std::vector<CheckResult> closed_form_checks(const Config& c,
                                            const IntPolynomial& delta,
                                            const Arrangement& arr,
                                            Guards guards = {});

/// delta(1), i.e. (d + n - 1)! vol(P).
Integer normalized_volume(const IntPolynomial& delta);
/// sum #BOX(F) V_F.
Integer volume_cross_sum(std::span<const FlatData> flats);
CheckResult volume_check(const IntPolynomial& delta,
                         std::span<const FlatData> flats);

struct InteriorPoints {
  std::vector<LatticePoint> points;  // distinct, sorted
  std::size_t duplicates = 0;        // parameterization produced a point twice
  std::size_t rejected = 0;          // produced point failed the membership check

  bool clean() const { return duplicates == 0 && rejected == 0; }
};

/// Interior lattice points of m P produced from (F, w in BOX(F), bounded
/// cell C of the restriction to F, nonnegative ray coefficients):
/// v = l(w) + sum_{i not in F, C in H_i-} (b_i, e_i)
///          + sum_{i not in F, C in H_i+} (0, e_i) + alpha/beta terms.
/// Every point is re-checked against the cone interior.
InteriorPoints interior_points(const Config& c, const Arrangement& arr,
                               std::size_t m, Guards guards = {});

/// One (F, w, C) triple: the point with zero ray coefficients and the rays.
struct InteriorPiece {
  IndepSet flat;
  BoxPoint box_point;
  std::vector<Sign> cell;  // sign vector in the restriction
  LatticePoint base;
  std::vector<LatticePoint> rays;
};

std::vector<InteriorPiece> interior_pieces(const Config& c, const Arrangement& arr,
                                           Guards guards = {});
InteriorPoints interior_points(const Config& c, std::span<const InteriorPiece> pieces,
                               std::size_t m, const DilateCounter& oracle);

struct ReciprocityReport {
  std::vector<Integer> expected;  // index m = 0..m_max
  std::vector<Integer> actual;
  bool clean = true;              // no duplicates or rejected points
  bool ok() const { return clean && expected == actual; }
};

/// Compares interior counts for 1 <= m <= m_max with the series of
/// t^(d + n) delta(1/t) / (1 - t)^(d + n).
ReciprocityReport reciprocity_check(const Config& c, const IntPolynomial& delta,
                                    const Arrangement& arr, std::size_t m_max,
                                    Guards guards = {});

/// {(lambda v_i, e_i) : 0 <= lambda <= a_i}, sorted.
std::vector<LatticePoint> lattice_points_of_P(const Config& c);

/// delta_i <= delta_j for i <= j <= d - i when the matroid is coloop free;
/// skipped ("not applicable") otherwise.
CheckResult inequality_check(const Config& c, const IntPolynomial& delta);

/// Replaces b_i by -b_i where flips[i] < 0.
Config orientation_flip(const Config& c, std::span<const int> flips);

bool degree_bound_check(const IntPolynomial& delta, std::size_t d);

}  // namespace lawrence

#endif  // LAWRENCE_EHRHART_HPP_
