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

#ifndef LAWRENCE_BOX_HPP_
#define LAWRENCE_BOX_HPP_

#include <cstddef>
#include <vector>

#include "lawrence/exact.hpp"
#include "lawrence/matroid.hpp"

namespace lawrence {

/// A lattice point w = sum_j alpha_j b_{k_j} of the open parallelepiped
/// spanned by an independent set, 0 < alpha_j < 1.
struct BoxPoint {
  IntVector w;
  RatVector alpha;  // aligned with IndepSet::indices

  friend bool operator==(const BoxPoint&, const BoxPoint&) = default;
};

/// Lattice points of the open box of f, sorted lexicographically by w. The
/// empty set yields the single point 0.
std::vector<BoxPoint> box_points(const Config& c, const IndepSet& f);

std::size_t box_count(const Config& c, const IndepSet& f);

/// The lattice point of N x Z^n lifting a box point:
/// sum_j (alpha_j b_{k_j}, e_{k_j}). Its last-n-coordinate sum is dim F.
IntVector lift(const Config& c, const IndepSet& f, const BoxPoint& p);

}  // namespace lawrence

#endif  // LAWRENCE_BOX_HPP_
