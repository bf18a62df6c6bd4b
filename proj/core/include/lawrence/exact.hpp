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

#ifndef LAWRENCE_EXACT_HPP_
#define LAWRENCE_EXACT_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lawrence {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds a rational and puts it in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p" or "p/q" (optional sign) into a canonical rational.
/// Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Dense integer matrix with row-major storage.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j]; `height` is used when the list
  /// is empty.
  static IntMatrix from_columns(std::span<const IntVector> columns,
                                std::size_t height);
  static IntMatrix from_rows(std::span<const IntVector> rows,
                             std::size_t width);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  /// Returns rows [first, first + count) as a new matrix.
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// Returns columns [first, first + count) as a new matrix.
  IntMatrix column_block(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Integer content(std::span<const Integer> v);  // gcd of entries, >= 0
bool is_zero(std::span<const Integer> v);

struct HermiteResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
  IntMatrix s;  // diagonal, d_1 | d_2 | ...
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
  std::vector<Integer> divisors;  // the nonzero diagonal, all positive
};

/// u * m * v == s with positive invariant factors.
SmithResult smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws if m is not square with det +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Basis (in row HNF) of the group of lattice points of Z^dim lying in the
/// rational span of `vectors`.
std::vector<IntVector> saturate_span(std::span<const IntVector> vectors,
                                     std::size_t dim);

/// For a saturated sublattice L of Z^dim given by `saturated_basis`, returns
/// the (dim - r) x dim integer matrix of a surjection Z^dim -> Z^(dim - r)
/// whose kernel is exactly L. The map comes from the HNF of the basis
/// columns, so it is deterministic.
IntMatrix quotient_projection(std::span<const IntVector> saturated_basis,
                              std::size_t dim);

/// One exact solution of a * x == b, or nullopt if the system is
/// inconsistent. Free variables are set to zero.
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);

/// Rational rank of [a | b] compared against rank of a.
bool is_consistent(const IntMatrix& a, const RatVector& b);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace lawrence

#endif  // LAWRENCE_EXACT_HPP_
