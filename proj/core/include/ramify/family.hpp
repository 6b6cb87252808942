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

#ifndef RAMIFY_FAMILY_HPP_
#define RAMIFY_FAMILY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramify/cover.hpp"
#include "ramify/deform.hpp"

namespace ramify {

// One-parameter pencil x -> (g0 + t g1) / (h0 + t h1) over the parameter field.
// The pencil lives in "family coordinates"; origin is the t = 0 fiber in the
// coordinates the family was built from, with
//   specialize(0) == postcompose(precompose(origin, source_change), target_change).
struct Family {
  std::string description;
  FieldSpec param_field;
  int degree = 0;
  Poly g0;
  Poly g1;
  Poly h0;
  Poly h1;
  Cover origin;
  Mobius source_change;
  Mobius target_change;

  // Throws ValidationError at a parameter where the fiber loses degree.
  Cover specialize(const FieldElement& t) const;
  Cover specialize(Code t) const { return specialize(param_field.element(t)); }

  // The t at which both degree-d coefficients vanish, if any. Happens for
  // wild_family exactly when the wild point has ramification index p.
  std::optional<FieldElement> degenerate_parameter() const;

  // Same family transported back so that specialize(0) == origin.
  Family in_original_coordinates() const;
};

std::string describe_pencil(const Poly& g0, const Poly& g1, const Poly& h0, const Poly& h1);

Family wild_family(const Cover& c, int max_ext);
Family osserman_family(std::uint32_t p);  // x^{p+2} + t x^p + x, p > 2
Family power_family(std::uint32_t p);     // x^{p+1} + t x^p
Family constant_family(const Cover& c);

struct FamilyFiber {
  FieldElement t;
  Cover cover;
  Poly disc;
  Divisor lengths;
  Poly residual;  // unsplit part of the discriminant
  bool split = true;
  std::vector<RamificationIndex> ram;  // aligned with FamilyReport::support
};

struct FamilyReport {
  std::vector<Point> support;  // union of length supports over all fibers
  std::vector<FamilyFiber> fibers;
  std::vector<FieldElement> skipped;  // samples equal to the degenerate parameter
  bool degree_constant = true;
  bool disc_constant = true;
  bool length_divisor_constant = true;
  bool pairwise_inequivalent = true;
  std::vector<std::pair<std::size_t, std::size_t>> equivalent_pairs;
};

// Length divisors of unsplit fibers are compared through the split part and
// the residual factor.
FamilyReport verify_family(const Family& f, const std::vector<FieldElement>& ts, int max_ext, int threads = 1);

// All elements of `field` when count == 0 or count >= |field|, otherwise
// `count` distinct elements drawn with the given seed, in code order.
std::vector<FieldElement> sample_parameters(FieldSpec field, std::size_t count, std::uint64_t seed);

struct FamilyDirection {
  NormalizedCover base;  // normalize(origin)
  DeformationVector tangent;
};

// d/dt at t = 0 in the chart of normalize(origin).
FamilyDirection family_direction(const Family& f, int max_ext);

}  // namespace ramify

#endif  // RAMIFY_FAMILY_HPP_
