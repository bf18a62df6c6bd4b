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


#include "lawrence/sampling.hpp"

#include <utility>

#include "lawrence/error.hpp"

namespace lawrence {

Config random_config(Rng& rng, const SampleOptions& opt) {
  if (opt.max_rank == 0 || opt.max_size < 1 || opt.entry_bound < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "sampling needs max_rank >= 1 and entry_bound >= 1");
  }
  for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const auto d = static_cast<std::size_t>(
        uniform_int(rng, 1, static_cast<std::int64_t>(opt.max_rank)));
    if (d > opt.max_size) continue;
    const auto n = static_cast<std::size_t>(uniform_int(
        rng, static_cast<std::int64_t>(d), static_cast<std::int64_t>(opt.max_size)));
    std::vector<IntVector> vectors(n, IntVector(d));
    for (auto& v : vectors)
      for (auto& x : v) x = Integer(static_cast<long>(
                            uniform_int(rng, -opt.entry_bound, opt.entry_bound)));
    try {
      return validate_config(d, std::move(vectors));
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::kRetryExhausted, "no generating configuration sampled");
}

std::vector<int> random_signs(Rng& rng, std::size_t n) {
  std::vector<int> out(n);
  for (auto& s : out) s = uniform_int(rng, 0, 1) == 0 ? -1 : 1;
  return out;
}

std::vector<std::size_t> random_subset(Rng& rng,
                                       const std::vector<std::size_t>& from) {
  std::vector<std::size_t> out;
  for (std::size_t i : from)
    if (uniform_int(rng, 0, 1) == 1) out.push_back(i);
  return out;
}

}  // namespace lawrence
