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

#include "lawrence/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "lawrence/error.hpp"

namespace lawrence {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPolynomial::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Rational IntPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::shift(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::substitute_reciprocal(std::size_t total_degree) const {
  if (is_zero()) return {};
  if (*degree() > total_degree) {
    throw Error(ErrorCode::kInvalidArgument,
                "reciprocal substitution below the polynomial degree");
  }
  std::vector<Integer> v(total_degree + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[total_degree - k] = coeffs_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> v(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(v);
  trim();
  return *this;
}

IntPolynomial operator*(const Integer& c, IntPolynomial p) {
  for (auto& x : p.coeffs_) x *= c;
  p.trim();
  return p;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial one_minus_t_pow(std::size_t k) {
  IntPolynomial r{1};
  const IntPolynomial f{1, -1};
  for (std::size_t i = 0; i < k; ++i) r *= f;
  return r;
}

IntPolynomial t_minus_one_pow(std::size_t k) {
  IntPolynomial r{1};
  const IntPolynomial f{-1, 1};
  for (std::size_t i = 0; i < k; ++i) r *= f;
  return r;
}

std::vector<Integer> series_over_one_minus_t(const IntPolynomial& p,
                                             std::size_t k, std::size_t order) {
  // 1 / (1 - t)^k = sum_m C(m + k - 1, k - 1) t^m.
  std::vector<Integer> out(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    for (std::size_t j = 0; j <= m && j < p.coefficients().size(); ++j) {
      const std::size_t r = m - j;
      Integer w = k == 0 ? Integer(r == 0 ? 1 : 0) : binomial(r + k - 1, k - 1);
      out[m] += p[j] * w;
    }
  }
  return out;
}

}  // namespace lawrence
