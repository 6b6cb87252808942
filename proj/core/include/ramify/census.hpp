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

#ifndef RAMIFY_CENSUS_HPP_
#define RAMIFY_CENSUS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ramify/cover.hpp"
#include "ramify/linalg.hpp"

namespace ramify {

// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

// Visits every rank-2 reduced row echelon 2 x n matrix over `field`. Rows are
// passed as coefficient vectors; the index counts visited matrices from zero.
using EchelonVisitor = std::function<void(std::uint64_t index, const Vec& row1, const Vec& row2)>;
void for_each_echelon_plane(FieldSpec field, std::size_t n, const EchelonVisitor& visit);
std::uint64_t count_echelon_planes(FieldSpec field, std::size_t n);

inline constexpr std::uint64_t kDefaultCensusBudget = 5'000'000;

// Planes of degree <= d polynomials containing a polynomial of exact degree d
// (first pivot in the x^d column).
std::uint64_t count_top_degree_planes(FieldSpec field, int d);

// One cover per equivalence class of separable degree-d covers over `field`, in
// enumeration order. Throws BudgetError when the plane count exceeds budget.
std::vector<Cover> enumerate_covers(FieldSpec field, int d, std::uint64_t budget = kDefaultCensusBudget);

struct CensusOptions {
  int max_ext = 2;
  std::uint64_t budget = kDefaultCensusBudget;
  int threads = 1;
  bool tangent = true;  // X_D dimensions
  bool xli = false;     // X_(l_i) dimensions for split records
  std::size_t examples = 3;
};

struct CensusRecord {
  Poly disc;  // monic
  Divisor lengths;
  Poly residual;  // unsplit part of disc within max_ext; 1 when split
  std::vector<int> length_multiset;
  std::uint64_t class_count = 0;
  std::map<std::size_t, std::uint64_t> tangent_dims;      // dim -> classes
  std::map<std::size_t, std::uint64_t> tangent_dims_xli;  // split records only
  std::uint64_t tangent_unavailable = 0;                   // no chart within max_ext
  bool wild = false;                                       // some l >= p
  Cover representative;
  std::uint64_t representative_index = 0;
  std::vector<Cover> positive_dim_examples;
  std::size_t galois_orbit = 1;  // orbit of disc under Gal(F_q / F_p)

  bool split() const { return residual.is_one(); }
  bool tame_lengths(std::uint32_t p) const;  // all l < p
};

struct Census {
  FieldSpec field;
  int degree = 0;
  std::uint64_t planes_searched = 0;
  std::uint64_t total_classes = 0;
  std::vector<CensusRecord> records;  // sorted by disc
  // Classes counted once per Gal(F_q / F_p) orbit.
  double classes_up_to_galois = 0;
};

Census census_by_disc(FieldSpec field, int d, const CensusOptions& options = {});

struct CensusViolation {
  Poly disc;
  Cover cover;
  std::size_t dim = 0;
};

struct TheoremReport {
  Census census;
  std::uint64_t tame_classes = 0;
  std::uint64_t wild_classes = 0;
  std::uint64_t unchecked_classes = 0;  // no chart within max_ext
  std::vector<CensusViolation> violations;
  std::map<std::size_t, std::uint64_t> wild_dims;
  std::uint64_t length_one_points = 0;  // points with l = 1 (char 2: expected 0)
};

// X_D is zero-dimensional at every class whose lengths are all < p (p = 2, 3).
TheoremReport verify_theorem_char23(FieldSpec field, int d, const CensusOptions& options = {});

}  // namespace ramify

#endif  // RAMIFY_CENSUS_HPP_
