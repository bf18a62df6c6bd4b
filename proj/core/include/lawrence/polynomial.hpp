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

#ifndef LAWRENCE_POLYNOMIAL_HPP_
#define LAWRENCE_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lawrence/exact.hpp"

namespace lawrence {

/// Univariate polynomial in t with integer coefficients, stored by exponent.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(const Integer& c, std::size_t exponent);

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k (zero beyond the degree).
  Integer operator[](std::size_t k) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;

  /// t^k * p.
  IntPolynomial shift(std::size_t k) const;

  /// t^total_degree * p(1/t). Throws kInvalidArgument when
  /// total_degree < deg p.
  IntPolynomial substitute_reciprocal(std::size_t total_degree) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) {
    return a *= b;
  }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial p);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Ascending display, e.g. "1 + 3t + 4t^2" or "1 - t^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// (1 - t)^k and (t - 1)^k.
IntPolynomial one_minus_t_pow(std::size_t k);
IntPolynomial t_minus_one_pow(std::size_t k);

/// Coefficients 0..order of p(t) / (1 - t)^k as a power series.
std::vector<Integer> series_over_one_minus_t(const IntPolynomial& p,
                                             std::size_t k, std::size_t order);

}  // namespace lawrence

#endif  // LAWRENCE_POLYNOMIAL_HPP_
