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
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>

#include "lawrence/ehrhart.hpp"
#include "lawrence/error.hpp"
#include "lawrence/linear_system.hpp"

namespace lawrence {

namespace {

// Homogeneous rows a . (x, mu) <= 0; strict for the interior.
template <typename T>
using Rows = std::vector<std::vector<T>>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Primitive normals of the hyperplanes spanned by d - 1 of the vectors,
// both signs. Signed maximal minors give the normal.
std::set<IntVector> hyperplane_normals(const Config& c) {
  const std::size_t d = c.rank, n = c.size();
  std::set<IntVector> out;
  std::vector<std::size_t> pick;
  auto add = [&] {
    IntVector u(d);
    for (std::size_t k = 0; k < d; ++k) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t r = 0; r < pick.size(); ++r)
        for (std::size_t col = 0, t = 0; col < d; ++col) {
          if (col == k) continue;
          minor(r, t++) = c.vectors[pick[r]][col];
        }
      u[k] = determinant(minor);
      if (k % 2 == 1) u[k] = -u[k];
    }
    if (is_zero(u)) return;
    Integer g = content(u);
    for (auto& x : u) x /= g;
    IntVector neg = u;
    for (auto& x : neg) x = -x;
    out.insert(std::move(u));
    out.insert(std::move(neg));
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() + 1 == d) {
      add();
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// <u, x> - sum_i max(0, <u, b_i>) mu_i <= 0 for every normal u, and
// -mu_i <= 0.
Rows<Integer> cone_rows(const Config& c) {
  const std::size_t d = c.rank, n = c.size();
  Rows<Integer> rows;
  for (const IntVector& u : hyperplane_normals(c)) {
    std::vector<Integer> row(d + n);
    for (std::size_t k = 0; k < d; ++k) row[k] = u[k];
    for (std::size_t i = 0; i < n; ++i) {
      Integer h = dot(u, c.vectors[i]);
      if (h > 0) row[d + i] = -h;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> row(d + n);
    row[d + i] = -1;
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
Rows<T> convert(const Rows<Integer>& src) {
  Rows<T> out;
  for (const auto& row : src) {
    std::vector<T> r;
    for (const auto& x : row) {
      if constexpr (std::is_same_v<T, Integer>) {
        r.push_back(x);
      } else {
        r.push_back(static_cast<T>(x.get_si()));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <typename T>
bool row_holds(const std::vector<T>& row, bool strict, const std::vector<T>& v) {
  T s = 0;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) s += row[j] * v[j];
  return strict ? s < 0 : s <= 0;
}

// Walks the fibre of the cone over a fixed mu. The first d - 1 coordinates
// range over the bounding box of the zonotope; the last one over the
// interval the rows leave.
template <typename T>
struct FibreWalker {
  const Rows<T>& rows;
  const Config& config;
  bool strict = false;
  std::vector<T> v;  // (x, mu)
  T total = 0;
  const std::function<void(const std::vector<T>&)>* emit = nullptr;

  void run(std::size_t j) {
    const std::size_t d = config.rank;
    if (j + 1 == d) {
      last();
      return;
    }
    T lo = 0, hi = 0;
    for (std::size_t i = 0; i < config.size(); ++i) {
      const T& mu = v[d + i];
      T b = static_cast<T>(config.vectors[i][j].get_si());
      if (b > 0) hi += b * mu;
      if (b < 0) lo += b * mu;
    }
    for (T x = lo; x <= hi; ++x) {
      v[j] = x;
      run(j + 1);
    }
    v[j] = 0;
  }

  void last() {
    const std::size_t j = config.rank - 1;
    bool has_lo = false, has_hi = false;
    T lo = 0, hi = 0;
    for (const auto& row : rows) {
      const T& cj = row[j];
      T rest = 0;
      for (std::size_t k = 0; k < row.size(); ++k)
        if (k != j && row[k] != 0) rest += row[k] * v[k];
      if (cj == 0) {
        if (strict ? !(rest < 0) : !(rest <= 0)) return;
        continue;
      }
      if (cj > 0) {
        T b = strict ? T(ceil_div(T(-rest), cj) - 1) : T(floor_div(T(-rest), cj));
        if (!has_hi || b < hi) hi = b;
        has_hi = true;
      } else {
        T pos = -cj;
        T b = strict ? T(floor_div(rest, pos) + 1) : T(ceil_div(rest, pos));
        if (!has_lo || b > lo) lo = b;
        has_lo = true;
      }
    }
    if (!has_lo || !has_hi) {
      throw Error(ErrorCode::kInvalidArgument, "internal: unbounded fibre");
    }
    if (lo > hi) return;
    if (emit == nullptr) {
      total += hi - lo + 1;
      return;
    }
    for (T x = lo; x <= hi; ++x) {
      v[j] = x;
      (*emit)(v);
    }
    v[j] = 0;
  }
};

}  // namespace

struct DilateCounter::Impl {
  Config config;
  Guards guards;
  Rows<Integer> exact;
  Rows<std::int64_t> fast;
  Integer row_mass = 0;     // max over rows of sum |a_j|
  Integer vector_mass = 0;  // max over k of sum_i |b_ik|

  void check_guard(std::size_t m) const {
    Integer fibres = 1;
    for (std::size_t i = 0; i < config.size(); ++i) fibres *= Integer(m + 1);
    if (fibres > Integer(guards.max_dilate_fibers)) {
      throw Error(ErrorCode::kSizeGuard,
                  "dilate " + std::to_string(m) + " needs " + fibres.get_str() +
                      " fibres, above the bound " +
                      std::to_string(guards.max_dilate_fibers));
    }
  }

  bool fits_int64(std::size_t m) const {
    Integer bound = Integer(m) * (vector_mass + 1);
    return row_mass * bound < (Integer(1) << 62);
  }

  template <typename T>
  void walk(const Rows<T>& rows, std::size_t m, bool interior,
            const std::function<void(const std::vector<T>&)>* emit,
            Integer& total) const {
    const std::size_t d = config.rank, n = config.size();
    FibreWalker<T> walker{rows, config, interior, std::vector<T>(d + n, 0), 0, emit};
    // Compositions of m into n parts, positive for the interior.
    const std::size_t low = interior ? 1 : 0;
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i + 1 == n) {
        if (left < low) return;
        walker.v[d + i] = static_cast<T>(left);
        walker.run(0);
        return;
      }
      for (std::size_t k = low; k <= left; ++k) {
        walker.v[d + i] = static_cast<T>(k);
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, m);
    if constexpr (std::is_same_v<T, Integer>) {
      total += walker.total;
    } else {
      total += Integer(static_cast<long>(walker.total));
    }
  }
};

DilateCounter::DilateCounter(const Config& c, Guards guards)
    : impl_(std::make_unique<Impl>()) {
  if (c.size() == 0 || c.rank == 0) {
    throw Error(ErrorCode::kEmptyConfig, "dilate counting needs a nonempty configuration");
  }
  if (rank(c.matrix()) != c.rank) {
    throw Error(ErrorCode::kNotGenerating, "dilate counting needs a spanning configuration");
  }
  impl_->config = c;
  impl_->guards = guards;
  impl_->exact = cone_rows(c);
  for (const auto& row : impl_->exact) {
    Integer mass = 0;
    for (const auto& x : row) mass += abs(x);
    impl_->row_mass = std::max(impl_->row_mass, mass);
  }
  for (std::size_t k = 0; k < c.rank; ++k) {
    Integer mass = 0;
    for (const auto& b : c.vectors) mass += abs(b[k]);
    impl_->vector_mass = std::max(impl_->vector_mass, mass);
  }
  if (impl_->row_mass < (Integer(1) << 30) && impl_->vector_mass < (Integer(1) << 30))
    impl_->fast = convert<std::int64_t>(impl_->exact);
}

DilateCounter::~DilateCounter() = default;
DilateCounter::DilateCounter(DilateCounter&&) noexcept = default;
DilateCounter& DilateCounter::operator=(DilateCounter&&) noexcept = default;

Integer DilateCounter::count(std::size_t m, bool interior) const {
  impl_->check_guard(m);
  Integer total = 0;
  if (!impl_->fast.empty() && impl_->fits_int64(m)) {
    impl_->walk<std::int64_t>(impl_->fast, m, interior, nullptr, total);
  } else {
    impl_->walk<Integer>(impl_->exact, m, interior, nullptr, total);
  }
  return total;
}

std::vector<LatticePoint> DilateCounter::points(std::size_t m, bool interior) const {
  impl_->check_guard(m);
  std::vector<LatticePoint> out;
  std::function<void(const std::vector<Integer>&)> emit =
      [&](const std::vector<Integer>& v) { out.push_back(v); };
  Integer total = 0;
  impl_->walk<Integer>(impl_->exact, m, interior, &emit, total);
  std::sort(out.begin(), out.end());
  return out;
}

bool DilateCounter::contains(const LatticePoint& v, bool interior) const {
  if (v.size() != impl_->config.rank + impl_->config.size()) return false;
  for (const auto& row : impl_->exact)
    if (!row_holds(row, interior, v)) return false;
  return true;
}

bool DilateCounter::has_small_rows() const { return !impl_->fast.empty(); }

bool DilateCounter::contains_small(std::span<const std::int64_t> v, bool interior) const {
  if (v.size() != impl_->config.rank + impl_->config.size()) return false;
  for (const auto& row : impl_->fast) {
    __int128 s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += static_cast<__int128>(row[j]) * v[j];
    if (interior ? !(s < 0) : !(s <= 0)) return false;
  }
  return true;
}

bool zonotope_fibre_contains(const Config& c, const LatticePoint& v, bool interior) {
  const std::size_t d = c.rank, n = c.size();
  if (v.size() != d + n) return false;
  LinearSystem sys(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    if (interior) {
      sys.add_gt(e, 0);
      sys.add_lt(e, v[d + i]);
    } else {
      sys.add_ge(e, 0);
      sys.add_le(e, v[d + i]);
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    IntVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = c.vectors[i][k];
    sys.add_equality(std::move(row), v[k]);
  }
  return feasible(sys).feasible;
}

Integer count_lattice_points(const Config& c, std::size_t m, Guards guards) {
  return DilateCounter(c, guards).count(m);
}

}  // namespace lawrence
