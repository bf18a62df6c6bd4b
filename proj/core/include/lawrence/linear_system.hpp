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

#ifndef LAWRENCE_LINEAR_SYSTEM_HPP_
#define LAWRENCE_LINEAR_SYSTEM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lawrence/exact.hpp"

namespace lawrence {

enum class Strictness { kWeak, kStrict };
enum class Direction { kLessEqual, kGreaterEqual };

struct Equality {
  IntVector row;
  Rational rhs;
};

/// row . x (<= | >=) rhs, or the strict variant.
struct Inequality {
  IntVector row;
  Rational rhs;
  Strictness strictness = Strictness::kWeak;
  Direction direction = Direction::kLessEqual;

  bool satisfied_by(std::span<const Rational> x) const;
};

/// Mixed system of equalities and weak/strict inequalities over the
/// rationals.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  const std::vector<Equality>& equalities() const { return equalities_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }

  void add_equality(IntVector row, Rational rhs);
  void add_inequality(IntVector row, Rational rhs, Direction direction,
                      Strictness strictness = Strictness::kWeak);

  void add_le(IntVector row, Rational rhs) {
    add_inequality(std::move(row), std::move(rhs), Direction::kLessEqual);
  }
  void add_lt(IntVector row, Rational rhs) {
    add_inequality(std::move(row), std::move(rhs), Direction::kLessEqual,
                   Strictness::kStrict);
  }
  void add_ge(IntVector row, Rational rhs) {
    add_inequality(std::move(row), std::move(rhs), Direction::kGreaterEqual);
  }
  void add_gt(IntVector row, Rational rhs) {
    add_inequality(std::move(row), std::move(rhs), Direction::kGreaterEqual,
                   Strictness::kStrict);
  }

  bool satisfied_by(std::span<const Rational> x) const;

 private:
  std::size_t unknowns_;
  std::vector<Equality> equalities_;
  std::vector<Inequality> inequalities_;
};

struct Feasibility {
  bool feasible = false;
  std::optional<RatVector> witness;  // set iff feasible
};

struct EliminationOptions {
  /// Chernikov's rule; off gives plain Fourier-Motzkin.
  bool prune_histories = true;
};

/// Fourier-Motzkin feasibility with back-substituted witness. Equalities are
/// eliminated by substitution first; inequality combinations are pruned by
/// Chernikov's history rule and by duplicate/dominated-row removal. The
/// witness is re-checked against the input before returning.
Feasibility feasible(const LinearSystem& system, EliminationOptions options = {});

/// Projects out `variables`. The result keeps the same unknown count; the
/// eliminated columns are identically zero and every inequality is in
/// `<=` form, normalized by the content of its row.
LinearSystem eliminate(const LinearSystem& system,
                       std::span<const std::size_t> variables,
                       EliminationOptions options = {});

}  // namespace lawrence

#endif  // LAWRENCE_LINEAR_SYSTEM_HPP_
