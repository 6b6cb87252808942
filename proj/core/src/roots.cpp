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

#include <algorithm>
#include <numeric>

#include "ramify/error.hpp"
#include "ramify/poly.hpp"

namespace ramify {

namespace {

struct Chunk {
  Poly factor;
  int degree;
  int multiplicity;
};

}  // namespace

RootsResult roots_with_multiplicity(const Poly& a, int max_ext) {
  if (a.is_zero()) throw ValidationError("roots of the zero polynomial");
  const FieldSpec base = a.field();
  const std::uint32_t p = base.characteristic();
  const int m = static_cast<int>(base.degree());
  const int limit = std::max(1, std::min(max_ext, static_cast<int>(kMaxExtensionDegree) / m));

  std::vector<Chunk> chunks;
  for (const auto& sf : squarefree_decomposition(a)) {
    for (auto& dd : distinct_degree_factorization(sf.factor)) {
      chunks.push_back({std::move(dd.factor), dd.degree, sf.multiplicity});
    }
  }

  // Extension degree: the r <= limit covering the most root mass; smallest r on ties.
  int r = 1;
  int best_mass = -1;
  for (int cand = 1; cand <= limit; ++cand) {
    int mass = 0;
    for (const auto& ch : chunks) {
      if (cand % ch.degree == 0) mass += ch.factor.degree();
    }
    if (mass > best_mass) {
      best_mass = mass;
      r = cand;
    }
  }

  const FieldSpec ext = FieldSpec::make(p, static_cast<std::uint32_t>(m * r), std::max(p, kDefaultMaxPrime));
  RootsResult result{ext, {}, Poly::constant(base, 1)};
  for (const auto& ch : chunks) {
    if (r % ch.degree != 0) {
      result.residual = result.residual * ch.factor.pow(static_cast<std::uint64_t>(ch.multiplicity));
      continue;
    }
    // The roots of a degree-i chunk live in F_{q^i}; search there, then embed.
    const FieldSpec sub = FieldSpec::make(p, static_cast<std::uint32_t>(m * ch.degree), std::max(p, kDefaultMaxPrime));
    const Poly local = ch.factor.embed(sub);
    int found = 0;
    for (Code z = 0; z < sub.size() && found < local.degree(); ++z) {
      if (local.eval(z) == 0) {
        result.roots.push_back({FieldElement(ext, sub.embed(z, ext)), ch.multiplicity});
        ++found;
      }
    }
    if (found != local.degree()) throw ComputationError("root search lost roots of " + ch.factor.to_string());
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const Root& x, const Root& y) { return x.value.code() < y.value.code(); });
  return result;
}

}  // namespace ramify
