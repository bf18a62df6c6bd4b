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

#include "lawrence/box.hpp"

#include "lawrence/error.hpp"

namespace lawrence {

std::vector<BoxPoint> box_points(const Config& c, const IndepSet& f) {
  if (f.indices.empty()) return {BoxPoint{IntVector(c.rank), {}}};

  std::vector<IntVector> cols;
  for (std::size_t i : f.indices) cols.push_back(c.vectors[i]);
  const IntMatrix a = IntMatrix::from_columns(cols, c.rank);

  // Integer bounding box of the closed parallelepiped.
  IntVector lo(c.rank), hi(c.rank);
  for (const auto& b : cols)
    for (std::size_t k = 0; k < c.rank; ++k) {
      if (b[k] < 0) lo[k] += b[k];
      if (b[k] > 0) hi[k] += b[k];
    }

  std::vector<BoxPoint> out;
  IntVector w = lo;
  while (true) {
    RatVector rhs(w.begin(), w.end());
    if (auto alpha = solve_rational(a, rhs)) {
      bool inside = true;
      for (const auto& x : *alpha)
        if (!(0 < x && x < 1)) {
          inside = false;
          break;
        }
      if (inside) out.push_back({w, std::move(*alpha)});
    }
    // Odometer, last coordinate fastest: lexicographic order.
    std::size_t k = c.rank;
    while (k > 0) {
      --k;
      if (w[k] < hi[k]) {
        ++w[k];
        break;
      }
      w[k] = lo[k];
      if (k == 0) return out;
    }
  }
}

std::size_t box_count(const Config& c, const IndepSet& f) {
  return box_points(c, f).size();
}

IntVector lift(const Config& c, const IndepSet& f, const BoxPoint& p) {
  if (p.alpha.size() != f.indices.size()) {
    throw Error(ErrorCode::kInvalidArgument, "box point does not match the set");
  }
  IntVector v(c.rank + c.size());
  for (std::size_t k = 0; k < c.rank; ++k) v[k] = p.w[k];
  for (std::size_t i : f.indices) v[c.rank + i] = 1;
  return v;
}

}  // namespace lawrence
