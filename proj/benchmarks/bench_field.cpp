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

#include <random>

#include "ramify/field.hpp"
#include "ramify/poly.hpp"

namespace {

using ramify::Code;

void BM_FieldMul(benchmark::State& state) {
  const auto f = ramify::make_field(static_cast<std::uint32_t>(state.range(0)),
                                    static_cast<std::uint32_t>(state.range(1)));
  std::mt19937_64 rng(1);
  std::vector<Code> xs(1024);
  for (auto& x : xs) x = rng() % f.size();
  Code acc = 1;
  for (auto _ : state) {
    for (Code x : xs) acc = f.mul(acc, x == 0 ? 1 : x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Args({3, 1})->Args({3, 2})->Args({2, 8})->Args({3, 8})->Args({2, 12});

void BM_FieldInv(benchmark::State& state) {
  const auto f = ramify::make_field(3, static_cast<std::uint32_t>(state.range(0)));
  Code acc = 0;
  for (auto _ : state) {
    for (Code x = 1; x < std::min<Code>(f.size(), 4096); ++x) acc ^= f.inv(x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldInv)->Arg(1)->Arg(4)->Arg(10);

void BM_Roots(benchmark::State& state) {
  const auto f = ramify::make_field(3, 2);
  std::mt19937_64 rng(2);
  std::vector<ramify::Poly> polys;
  for (int i = 0; i < 32; ++i) {
    std::vector<Code> c(static_cast<std::size_t>(state.range(0)) + 1);
    for (auto& x : c) x = rng() % f.size();
    c.back() = 1;
    polys.emplace_back(f, c);
  }
  for (auto _ : state) {
    for (const auto& p : polys) benchmark::DoNotOptimize(ramify::roots_with_multiplicity(p, 2));
  }
}
BENCHMARK(BM_Roots)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
