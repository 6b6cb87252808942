// Copyright 2026 The Ramify Authors. All rights reserved.
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

#include "ramify/census.hpp"

namespace {

void BM_EchelonPlanes(benchmark::State& state) {
  const auto f = ramify::make_field(3, 2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ramify::count_echelon_planes(f, n));
}
BENCHMARK(BM_EchelonPlanes)->Arg(3)->Arg(4)->Arg(5);

void BM_Census(benchmark::State& state) {
  const auto f = ramify::make_field(3, static_cast<std::uint32_t>(state.range(0)));
  ramify::CensusOptions o;
  o.tangent = state.range(2) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ramify::census_by_disc(f, static_cast<int>(state.range(1)), o));
}
BENCHMARK(BM_Census)->Args({1, 3, 1})->Args({1, 4, 1})->Args({2, 3, 0})->Args({2, 3, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
