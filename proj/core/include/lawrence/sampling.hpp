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


#ifndef LAWRENCE_SAMPLING_HPP_
#define LAWRENCE_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lawrence/matroid.hpp"
#include "lawrence/random.hpp"

namespace lawrence {

struct SampleOptions {
  std::size_t max_rank = 3;
  std::size_t max_size = 5;
  std::int64_t entry_bound = 3;
  std::size_t max_attempts = 100'000;
};

/// d uniform in [1, max_rank], n uniform in [d, max_size], entries uniform in
/// [-entry_bound, entry_bound]. The whole configuration is redrawn until it
/// is valid and generates Z^d. Throws kRetryExhausted or kInvalidArgument.
Config random_config(Rng& rng, const SampleOptions& opt = {});

/// Entries of -1 or +1, uniformly.
std::vector<int> random_signs(Rng& rng, std::size_t n);

/// Uniformly chosen subset, as sorted indices.
std::vector<std::size_t> random_subset(Rng& rng,
                                       const std::vector<std::size_t>& from);

}  // namespace lawrence

#endif  // LAWRENCE_SAMPLING_HPP_
