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

#include "lawrence/exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "lawrence/error.hpp"

namespace lawrence {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Integer& value) { return value.get_str(); }
std::string to_string(const Rational& value) { return value.get_str(); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns,
                                  std::size_t height) {
  IntMatrix m(height, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != height) {
      throw Error(ErrorCode::kDimensionMismatch, "column length mismatch");
    }
    for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows,
                               std::size_t width) {
  IntMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw Error(ErrorCode::kDimensionMismatch, "row length mismatch");
    }
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix b(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
  return b;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  IntMatrix b(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
  return b;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shape");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape");
  }
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

// row[target] -= q * row[source] on both matrices.
void row_axpy(IntMatrix& m, std::size_t target, std::size_t source,
              const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void col_axpy(IntMatrix& m, std::size_t target, std::size_t source,
              const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= q * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult r{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  std::size_t p = 0;
  for (std::size_t j = 0; j < h.cols() && p < h.rows(); ++j) {
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = p; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        if (best == h.rows() || abs(h(i, j)) < abs(h(best, j))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(p, best);
      u.swap_rows(p, best);
      bool clean = true;
      for (std::size_t i = p + 1; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        Integer q = floor_div(h(i, j), h(p, j));
        row_axpy(h, i, p, q);
        row_axpy(u, i, p, q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(p, j) == 0) continue;
    if (h(p, j) < 0) {
      negate_row(h, p);
      negate_row(u, p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = floor_div(h(i, j), h(p, j));
      if (q == 0) continue;
      row_axpy(h, i, p, q);
      row_axpy(u, i, p, q);
    }
    ++p;
  }
  r.rank = p;
  return r;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
                {}};
  IntMatrix& s = r.s;
  const std::size_t lim = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < lim; ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = s.rows(), bj = s.cols();
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j)
        if (s(i, j) != 0 && (bi == s.rows() || abs(s(i, j)) < abs(s(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == s.rows()) break;
    s.swap_rows(t, bi);
    r.u.swap_rows(t, bi);
    s.swap_cols(t, bj);
    r.v.swap_cols(t, bj);

    while (true) {
      bool changed = false;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        row_axpy(s, i, t, q);
        row_axpy(r.u, i, t, q);
        if (s(i, t) != 0) {
          s.swap_rows(t, i);
          r.u.swap_rows(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        col_axpy(s, j, t, q);
        col_axpy(r.v, j, t, q);
        if (s(t, j) != 0) {
          s.swap_cols(t, j);
          r.v.swap_cols(t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      bool offending = false;
      for (std::size_t i = t + 1; i < s.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_axpy(s, t, i, Integer(-1));
            row_axpy(r.u, t, i, Integer(-1));
            offending = true;
            break;
          }
      if (!offending) break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(r.u, t);
    }
    r.divisors.push_back(s(t, t));
  }
  return r;
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

namespace {

// Gauss-Jordan on a rational copy; returns the reduced matrix and pivot
// columns.
struct Reduced {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
};

Reduced gauss_jordan(std::vector<RatVector> rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  for (std::size_t j = 0; j < width && p < rows.size(); ++j) {
    std::size_t sel = rows.size();
    for (std::size_t i = p; i < rows.size(); ++i)
      if (rows[i][j] != 0) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[p], rows[sel]);
    Rational inv = 1 / rows[p][j];
    for (auto& x : rows[p]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == p || rows[i][j] == 0) continue;
      Rational f = rows[i][j];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= f * rows[p][k];
    }
    pivots.push_back(j);
    ++p;
  }
  return {std::move(rows), std::move(pivots)};
}

std::vector<RatVector> augmented(const IntMatrix& a, const RatVector& b) {
  std::vector<RatVector> rows(a.rows(), RatVector(a.cols() + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    rows[i][a.cols()] = b[i];
  }
  return rows;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square");
  }
  const std::size_t n = m.rows();
  std::vector<RatVector> a(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Rational det = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t sel = n;
    for (std::size_t i = j; i < n; ++i)
      if (a[i][j] != 0) {
        sel = i;
        break;
      }
    if (sel == n) return 0;
    if (sel != j) {
      std::swap(a[sel], a[j]);
      det = -det;
    }
    det *= a[j][j];
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a[i][j] == 0) continue;
      Rational f = a[i][j] / a[j][j];
      for (std::size_t k = j; k < n; ++k) a[i][k] -= f * a[j][k];
    }
  }
  return det.get_num();
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square");
  }
  const std::size_t n = m.rows();
  std::vector<RatVector> rows(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n + i] = 1;
  }
  Reduced red = gauss_jordan(std::move(rows), n);
  if (red.pivots.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is singular");
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = red.rows[i][n + j];
      if (x.get_den() != 1) {
        throw Error(ErrorCode::kInvalidArgument, "matrix is not unimodular");
      }
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::vector<IntVector> saturate_span(std::span<const IntVector> vectors,
                                     std::size_t dim) {
  if (vectors.empty()) return {};
  HermiteResult hnf = hermite_normal_form(IntMatrix::from_columns(vectors, dim));
  if (hnf.rank == 0) return {};
  // The first `rank` columns of u^-1 span the saturation.
  IntMatrix basis = inverse_unimodular(hnf.u).column_block(0, hnf.rank).transpose();
  IntMatrix canonical = hermite_normal_form(basis).h;
  std::vector<IntVector> out;
  out.reserve(hnf.rank);
  for (std::size_t i = 0; i < hnf.rank; ++i) out.push_back(canonical.row(i));
  return out;
}

IntMatrix quotient_projection(std::span<const IntVector> saturated_basis,
                              std::size_t dim) {
  if (saturated_basis.empty()) return IntMatrix::identity(dim);
  HermiteResult hnf =
      hermite_normal_form(IntMatrix::from_columns(saturated_basis, dim));
  return hnf.u.row_block(hnf.rank, dim - hnf.rank);
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side length");
  }
  Reduced red = gauss_jordan(augmented(a, b), a.cols());
  const std::size_t r = red.pivots.size();
  for (std::size_t i = r; i < red.rows.size(); ++i)
    if (red.rows[i][a.cols()] != 0) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t i = 0; i < r; ++i) x[red.pivots[i]] = red.rows[i][a.cols()];
  return x;
}

bool is_consistent(const IntMatrix& a, const RatVector& b) {
  return solve_rational(a, b).has_value();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace lawrence
