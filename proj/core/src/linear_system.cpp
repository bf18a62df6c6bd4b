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

#include "lawrence/linear_system.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "lawrence/error.hpp"

namespace lawrence {

bool Inequality::satisfied_by(std::span<const Rational> x) const {
  Rational lhs = dot(row, x);
  const bool le = direction == Direction::kLessEqual;
  if (strictness == Strictness::kStrict) return le ? lhs < rhs : lhs > rhs;
  return le ? lhs <= rhs : lhs >= rhs;
}

void LinearSystem::add_equality(IntVector row, Rational rhs) {
  if (row.size() != unknowns_) {
    throw Error(ErrorCode::kDimensionMismatch, "equality row length");
  }
  equalities_.push_back({std::move(row), std::move(rhs)});
}

void LinearSystem::add_inequality(IntVector row, Rational rhs,
                                  Direction direction, Strictness strictness) {
  if (row.size() != unknowns_) {
    throw Error(ErrorCode::kDimensionMismatch, "inequality row length");
  }
  inequalities_.push_back({std::move(row), std::move(rhs), strictness, direction});
}

bool LinearSystem::satisfied_by(std::span<const Rational> x) const {
  if (x.size() != unknowns_) return false;
  for (const auto& e : equalities_)
    if (dot(e.row, x) != e.rhs) return false;
  for (const auto& i : inequalities_)
    if (!i.satisfied_by(x)) return false;
  return true;
}

namespace {

using History = boost::dynamic_bitset<>;

// a . x <= b (strict: <).
struct Row {
  IntVector a;
  Rational b;
  bool strict = false;
  History history;
};

struct EqRow {
  IntVector a;
  Rational b;
};

struct Stage {
  std::size_t var = 0;
  bool substitution = false;
  EqRow equality;         // substitution stages
  std::vector<Row> rows;  // FM stages: rows mentioning `var`
};

// Divides by the content of `a`; a zero row is left untouched.
template <typename R>
void normalize(R& r) {
  Integer g = content(r.a);
  if (g == 0 || g == 1) return;
  for (auto& x : r.a) x /= g;
  r.b /= g;
}

class Eliminator {
 public:
  Eliminator(const LinearSystem& sys, bool prune)
      : n_(sys.unknowns()), prune_(prune) {
    for (const auto& e : sys.equalities()) {
      EqRow r{e.row, e.rhs};
      normalize(r);
      eqs_.push_back(std::move(r));
    }
    const std::size_t m = sys.inequalities().size();
    for (std::size_t k = 0; k < m; ++k) {
      const auto& in = sys.inequalities()[k];
      Row r{in.row, in.rhs, in.strictness == Strictness::kStrict, History(m)};
      if (in.direction == Direction::kGreaterEqual) {
        for (auto& x : r.a) x = -x;
        r.b = -r.b;
      }
      r.history.set(k);
      normalize(r);
      rows_.push_back(std::move(r));
    }
    tidy();
  }

  bool infeasible() const { return infeasible_; }

  bool mentions(std::size_t var) const {
    for (const auto& e : eqs_)
      if (e.a[var] != 0) return true;
    for (const auto& r : rows_)
      if (r.a[var] != 0) return true;
    return false;
  }

  // Cost of eliminating `var`; equalities are free.
  std::size_t cost(std::size_t var) const {
    for (const auto& e : eqs_)
      if (e.a[var] != 0) return 0;
    std::size_t pos = 0, neg = 0;
    for (const auto& r : rows_) {
      if (r.a[var] > 0) ++pos;
      if (r.a[var] < 0) ++neg;
    }
    return 1 + pos * neg;
  }

  void eliminate(std::size_t var) {
    if (infeasible_) return;
    auto eq = std::find_if(eqs_.begin(), eqs_.end(),
                           [&](const EqRow& e) { return e.a[var] != 0; });
    for (auto it = eq; it != eqs_.end(); ++it)
      if (it->a[var] != 0 && abs(it->a[var]) < abs(eq->a[var])) eq = it;
    if (eq != eqs_.end()) {
      substitute(var, eq);
    } else {
      fourier_motzkin(var);
    }
    tidy();
  }

  const std::vector<Stage>& stages() const { return stages_; }
  const std::vector<EqRow>& equalities() const { return eqs_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  void substitute(std::size_t var, std::vector<EqRow>::iterator eq) {
    EqRow pivot = *eq;
    eqs_.erase(eq);
    const Integer& a = pivot.a[var];
    const int sa = sgn(a);
    Integer abs_a = abs(a);
    // target' = |a| * target - sign(a) * target[var] * pivot.
    auto apply = [&](IntVector& t, Rational& tb) {
      if (t[var] == 0) return;
      Integer f = sa * t[var];
      for (std::size_t j = 0; j < n_; ++j) t[j] = abs_a * t[j] - f * pivot.a[j];
      tb = abs_a * tb - f * pivot.b;
    };
    for (auto& e : eqs_) {
      apply(e.a, e.b);
      normalize(e);
    }
    for (auto& r : rows_) {
      apply(r.a, r.b);
      normalize(r);
    }
    stages_.push_back({var, true, std::move(pivot), {}});
  }

  void fourier_motzkin(std::size_t var) {
    std::vector<Row> pos, neg, rest;
    for (auto& r : rows_) {
      if (r.a[var] > 0) {
        pos.push_back(std::move(r));
      } else if (r.a[var] < 0) {
        neg.push_back(std::move(r));
      } else {
        rest.push_back(std::move(r));
      }
    }
    ++fm_steps_;
    for (const auto& p : pos)
      for (const auto& q : neg) {
        History h = p.history | q.history;
        if (prune_ && h.count() > fm_steps_ + 1) continue;  // Chernikov
        Integer cp = -q.a[var];
        Integer cq = p.a[var];
        Row r{IntVector(n_), cp * p.b + cq * q.b, p.strict || q.strict,
              std::move(h)};
        for (std::size_t j = 0; j < n_; ++j) r.a[j] = cp * p.a[j] + cq * q.a[j];
        r.a[var] = 0;
        normalize(r);
        rest.push_back(std::move(r));
      }
    Stage st{var, false, {}, {}};
    st.rows = std::move(pos);
    st.rows.insert(st.rows.end(), std::make_move_iterator(neg.begin()),
                   std::make_move_iterator(neg.end()));
    stages_.push_back(std::move(st));
    rows_ = std::move(rest);
  }

  // Drops constant rows (flagging contradictions) and keeps only the
  // tightest row for each left-hand side.
  void tidy() {
    std::vector<EqRow> eqs;
    for (auto& e : eqs_) {
      if (is_zero(e.a)) {
        if (e.b != 0) infeasible_ = true;
        continue;
      }
      eqs.push_back(std::move(e));
    }
    eqs_ = std::move(eqs);

    std::map<IntVector, std::size_t> seen;
    std::vector<Row> kept;
    for (auto& r : rows_) {
      if (is_zero(r.a)) {
        if (r.strict ? !(0 < r.b) : !(0 <= r.b)) infeasible_ = true;
        continue;
      }
      auto [it, inserted] = seen.emplace(r.a, kept.size());
      if (inserted) {
        kept.push_back(std::move(r));
        continue;
      }
      Row& old = kept[it->second];
      History both = old.history & r.history;
      if (r.b < old.b || (r.b == old.b && r.strict && !old.strict)) {
        old = std::move(r);
      }
      old.history = std::move(both);
    }
    rows_ = std::move(kept);
  }

  std::size_t n_;
  bool prune_;
  std::vector<EqRow> eqs_;
  std::vector<Row> rows_;
  std::vector<Stage> stages_;
  std::size_t fm_steps_ = 0;
  bool infeasible_ = false;
};

// Picks a value inside the interval left by the rows of one FM stage.
Rational pick_value(const Stage& st, const RatVector& x) {
  std::optional<Rational> lo, hi;
  bool lo_strict = false, hi_strict = false;
  for (const auto& r : st.rows) {
    Rational rest = 0;
    for (std::size_t j = 0; j < r.a.size(); ++j)
      if (j != st.var && r.a[j] != 0) rest += r.a[j] * x[j];
    Rational bound = (r.b - rest) / r.a[st.var];
    if (r.a[st.var] > 0) {
      if (!hi || bound < *hi || (bound == *hi && r.strict)) {
        hi = bound;
        hi_strict = r.strict;
      }
    } else {
      if (!lo || bound > *lo || (bound == *lo && r.strict)) {
        lo = bound;
        lo_strict = r.strict;
      }
    }
  }
  if (lo && hi) return *lo == *hi ? *lo : Rational((*lo + *hi) / 2);
  if (lo) return lo_strict ? Rational(*lo + 1) : *lo;
  if (hi) return hi_strict ? Rational(*hi - 1) : *hi;
  return 0;
}

}  // namespace

Feasibility feasible(const LinearSystem& system, EliminationOptions options) {
  const std::size_t n = system.unknowns();
  Eliminator elim(system, options.prune_histories);
  while (!elim.infeasible()) {
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!elim.mentions(v)) continue;
      std::size_t c = elim.cost(v);
      if (best == n || c < best_cost) {
        best = v;
        best_cost = c;
      }
    }
    if (best == n) break;
    elim.eliminate(best);
  }
  if (elim.infeasible()) return {false, std::nullopt};

  RatVector x(n);
  const auto& stages = elim.stages();
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    if (it->substitution) {
      Rational rest = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != it->var) rest += it->equality.a[j] * x[j];
      x[it->var] = (it->equality.b - rest) / it->equality.a[it->var];
    } else {
      x[it->var] = pick_value(*it, x);
    }
  }
  if (!system.satisfied_by(x)) {
    throw Error(ErrorCode::kInvalidArgument,
                "internal: Fourier-Motzkin witness failed re-check");
  }
  return {true, std::move(x)};
}

LinearSystem eliminate(const LinearSystem& system,
                       std::span<const std::size_t> variables,
                       EliminationOptions options) {
  const std::size_t n = system.unknowns();
  Eliminator elim(system, options.prune_histories);
  std::vector<std::size_t> todo(variables.begin(), variables.end());
  while (!elim.infeasible()) {
    auto best = todo.end();
    std::size_t best_cost = 0;
    for (auto it = todo.begin(); it != todo.end(); ++it) {
      if (!elim.mentions(*it)) continue;
      std::size_t c = elim.cost(*it);
      if (best == todo.end() || c < best_cost) {
        best = it;
        best_cost = c;
      }
    }
    if (best == todo.end()) break;
    std::size_t v = *best;
    todo.erase(best);
    elim.eliminate(v);
  }
  LinearSystem out(n);
  if (elim.infeasible()) {
    // 0 < 0: keep the projection empty.
    out.add_lt(IntVector(n), 0);
    return out;
  }
  for (const auto& e : elim.equalities()) out.add_equality(e.a, e.b);
  for (const auto& r : elim.rows())
    out.add_inequality(r.a, r.b, Direction::kLessEqual,
                       r.strict ? Strictness::kStrict : Strictness::kWeak);
  return out;
}

}  // namespace lawrence
