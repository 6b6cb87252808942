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

#ifndef RAMIFY_DEFORM_HPP_
#define RAMIFY_DEFORM_HPP_

// Deformations of a chart-normalized cover g/h over A = k[t]/(t^N):
//
//   (g + t g_1 + t^2 g_2 + ...) / (h + t h_1 + t^2 h_2 + ...),  deg g_i, h_i <= d - 2.
//
// XD keeps the discriminant fixed; Xli keeps the differential lengths fixed
// and lets each branch point c_i move to c_i - t eps_i. The t-coefficient of
// the deformed discriminant is T_g(h_1) - T_h(g_1); for Xli it must equal
// sum_i eps_i (l_i mod p) disc / (x - c_i).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramify/cover.hpp"
#include "ramify/linalg.hpp"
#include "ramify/poly.hpp"

namespace ramify {

enum class Variant { kXD, kXli };

std::string to_string(Variant v);
Variant parse_variant(std::string_view s);  // "xd" | "xli"

struct TangentSystem {
  NormalizedCover cover;  // embedded into the system field
  Variant variant = Variant::kXD;
  // Rows: coefficients of x^0 .. x^{2d-3}. Columns: g_1 slots (x^0..x^{d-2}),
  // h_1 slots, then one eps slot per branch point (Xli only).
  FieldMatrix matrix;
  int slots_per_poly = 0;                // d - 1
  std::vector<FieldElement> branch_points;  // Xli only, roots of disc
  std::vector<int> lengths;                 // Xli only
  std::vector<bool> degenerate;             // Xli only: p | l_i, eps column is zero

  FieldSpec field() const { return matrix.field(); }
  std::size_t unknowns() const { return matrix.cols(); }
};

struct DeformationVector {
  Poly g1;
  Poly h1;
  std::vector<Code> eps;  // Xli only
};

TangentSystem tangent_system(const NormalizedCover& c, Variant variant, int max_ext);

struct TangentSpace {
  TangentSystem system;
  std::size_t dim = 0;
  std::vector<DeformationVector> basis;
};

// Solution space of the tangent system; every basis vector is re-checked by
// expanding the deformed discriminant directly.
TangentSpace tangent_space(const NormalizedCover& c, Variant variant, int max_ext);
std::size_t tangent_dim(const NormalizedCover& c, Variant variant, int max_ext);

DeformationVector unpack(const TangentSystem& s, const Vec& solution);
Vec pack(const TangentSystem& s, const DeformationVector& v);

// t-coefficient of the discriminant of (g + t g1)/(h + t h1) minus the
// prescribed first-order term, computed over dual numbers. Zero iff v is a
// first-order deformation.
Poly first_order_defect(const TangentSystem& s, const DeformationVector& v);

inline constexpr std::uint64_t kDefaultBruteForceBound = 10'000'000;

struct BruteForceResult {
  std::uint64_t solutions = 0;
  std::uint64_t searched = 0;
  std::size_t dim = 0;  // log_q(solutions)
};

// Counts all coefficient tuples over the system field whose deformed
// discriminant has the required form mod t^2. Throws BudgetError when the
// search space exceeds `bound`.
BruteForceResult brute_force_tangent(const NormalizedCover& c, Variant variant, int max_ext,
                                     std::uint64_t bound = kDefaultBruteForceBound, int threads = 1);

struct LiftResult {
  bool success = false;
  int order = 0;  // N
  // corrections[r-1] = (g_r, h_r) for r = 1 .. N-1 on success (or up to the
  // last unobstructed order).
  std::vector<std::pair<Poly, Poly>> corrections;
  std::optional<int> obstructed_at;
  Poly residual;  // t^r coefficient that could not be cancelled
};

// Order-by-order lift of an XD first-order deformation to k[t]/(t^N), N <= 8.
LiftResult lift_deformation(const NormalizedCover& c, const DeformationVector& v, int order);

// Discriminant of the deformation truncated mod t^N: element r is the
// t^r coefficient. Computed by direct power-series multiplication.
std::vector<Poly> deformed_discriminant(const Poly& g, const Poly& h,
                                        const std::vector<std::pair<Poly, Poly>>& corrections, int order);

// Projects a first-order change (dg, dh) of the pair (g, h) (degrees <= d)
// onto the chart coordinates, i.e. the unique (g_1, h_1) of degree <= d - 2
// spanning the same first-order plane.
DeformationVector chart_tangent(const NormalizedCover& c, const Poly& dg, const Poly& dh);

struct Fraction {
  Poly num;  // in X = x^p
  Poly den;
};

struct ShapeWitness {
  Fraction alpha;
  Fraction beta;
  Fraction gamma;
};

// Finds alpha, beta, gamma in k(x^p) with g_1 = alpha h + beta g and
// h_1 = gamma g - beta h, verified exactly; nullopt if none exist.
std::optional<ShapeWitness> solve_shape(const NormalizedCover& c, const DeformationVector& v);

// Substitutes x^p for X.
Poly expand_in_xp(const Poly& in_x_p);

}  // namespace ramify

#endif  // RAMIFY_DEFORM_HPP_
