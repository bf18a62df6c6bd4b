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


#include <benchmark/benchmark.h>

#include <vector>

#include "lawrence/arrangement.hpp"
#include "lawrence/ehrhart.hpp"
#include "lawrence/matroid.hpp"

namespace {

using namespace lawrence;

// 0: rank 2, n = 4. 1: rank 2, n = 5. 2: rank 3, n = 5. 3: rank 3, n = 6.
Config fixture(int k) {
  switch (k) {
    case 0:
      return validate_config(2, {{1, 0}, {0, 1}, {-2, 0}, {2, -1}});
    case 1:
      return validate_config(2, {{1, 0}, {0, 1}, {1, 1}, {2, -1}, {-1, 3}});
    case 2:
      return validate_config(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, -1, 2}});
    default:
      return validate_config(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, -1}});
  }
}

void BM_Formula(benchmark::State& state) {
  Config c = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_from_formula(c));
}
BENCHMARK(BM_Formula)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BoundedCells(benchmark::State& state) {
  Config c = fixture(state.range(0));
  Arrangement arr = choose_offsets(c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(delta_from_formula_bd(c, arr));
}
BENCHMARK(BM_BoundedCells)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CellEnumeration(benchmark::State& state) {
  Arrangement arr = choose_offsets(fixture(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(arr));
}
BENCHMARK(BM_CellEnumeration)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Bruteforce(benchmark::State& state) {
  Config c = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_bruteforce(c));
}
BENCHMARK(BM_Bruteforce)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_DilateCount(benchmark::State& state) {
  DilateCounter counter(fixture(2));
  const std::size_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(counter.count(m));
}
BENCHMARK(BM_DilateCount)->DenseRange(1, 7, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
