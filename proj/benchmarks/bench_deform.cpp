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

#include "ramify/cover.hpp"
#include "ramify/deform.hpp"

namespace {

const ramify::NormalizedCover& chart_example() {
  static const ramify::NormalizedCover nc =
      ramify::normalize(ramify::Cover::parse(ramify::make_field(3), "x^4 / x^3+x+1"), 2);
  return nc;
}

void BM_TangentDim(benchmark::State& state) {
  const auto v = state.range(0) == 0 ? ramify::Variant::kXD : ramify::Variant::kXli;
  for (auto _ : state) benchmark::DoNotOptimize(ramify::tangent_dim(chart_example(), v, 2));
}
BENCHMARK(BM_TangentDim)->Arg(0)->Arg(1);

void BM_BruteForceTangent(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ramify::brute_force_tangent(chart_example(), ramify::Variant::kXD, 2));
  }
}
BENCHMARK(BM_BruteForceTangent);

void BM_Lift(benchmark::State& state) {
  const auto space = ramify::tangent_space(chart_example(), ramify::Variant::kXD, 2);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto& v : space.basis) benchmark::DoNotOptimize(ramify::lift_deformation(chart_example(), v, order));
  }
}
BENCHMARK(BM_Lift)->Arg(2)->Arg(4)->Arg(8);

void BM_Normalize(benchmark::State& state) {
  const auto c = ramify::Cover::parse(ramify::make_field(2), "x^4 + x^3 + x / x^2 + x + 1");
  for (auto _ : state) benchmark::DoNotOptimize(ramify::normalize(c, 3));
}
BENCHMARK(BM_Normalize);

}  // namespace

BENCHMARK_MAIN();
