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


#ifndef LAWRENCE_VERIFICATION_HPP_
#define LAWRENCE_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lawrence/arrangement.hpp"
#include "lawrence/ehrhart.hpp"
#include "lawrence/matroid.hpp"
#include "lawrence/polynomial.hpp"
#include "lawrence/report.hpp"
#include "lawrence/sampling.hpp"

namespace lawrence {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::optional<std::size_t> m_max;  // default n + d + 2
  std::size_t region_pairs = 5;
  Guards guards;
  bool inject_fault = false;  // corrupts the formula result before comparing
};

struct CaseReport {
  Config config;
  std::uint64_t seed = 0;
  Arrangement arrangement;      // offsets of the main run
  Arrangement alt_arrangement;  // second offset draw
  bool offsets_regenerated = false;
  IntPolynomial formula;
  IntPolynomial bounded;
  IntPolynomial bruteforce;
  std::vector<int> flips;
  std::vector<CheckResult> checks;

  bool passed() const { return all_passed(checks); }
};

/// Offsets for a run: `offsets` when given and simple, otherwise drawn from
/// `seed`. Sets `regenerated` when given offsets were replaced.
Arrangement arrangement_for(const Config& c, const std::optional<RatVector>& offsets,
                            std::uint64_t seed, bool* regenerated = nullptr);

/// Seed of the second offset draw.
std::uint64_t alternate_seed(std::uint64_t seed);

/// Every identity and inequality on one configuration.
CaseReport verify_config(const Config& c, const std::optional<RatVector>& offsets,
                         const VerifyOptions& opt = {});

/// `cases` sampled configurations. Case k uses the k-th draw of a generator
/// seeded with `seed` for both the configuration and its own seed.
std::vector<CaseReport> verify_random(std::size_t cases, std::uint64_t seed,
                                      const SampleOptions& sample,
                                      const VerifyOptions& opt = {});

}  // namespace lawrence

#endif  // LAWRENCE_VERIFICATION_HPP_
