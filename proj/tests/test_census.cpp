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

#include <map>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "ramify/census.hpp"
#include "ramify/deform.hpp"
#include "ramify/error.hpp"

using namespace ramify;

namespace {

const FieldSpec F2 = make_field(2);
const FieldSpec F3 = make_field(3);
const FieldSpec F4 = make_field(2, 2);
const FieldSpec F9 = make_field(3, 2);

std::vector<Code> flat(const FieldMatrix& m) {
  std::vector<Code> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

// Classes per monic discriminant, found by running over every pair (g, h).
std::map<Poly, std::uint64_t> classes_by_pairs(FieldSpec f, int d) {
  std::map<Poly, std::set<std::vector<Code>>> planes;
  const auto polys = oracle::all_polys(f, d);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < polys.size(); ++j) {
      const Poly& g = polys[i];
      const Poly& h = polys[j];
      if (g.degree() != d) continue;
      if (gcd(g, h).degree() > 0) continue;
      const Poly w = h * derivative(g) - g * derivative(h);
      if (w.is_zero()) continue;
      planes[monic(w)].insert(flat(Cover::make(g, h).plane()));
    }
  }
  std::map<Poly, std::uint64_t> out;
  for (const auto& [k, v] : planes) out[k] = v.size();
  return out;
}

std::uint64_t brute_planes(FieldSpec f, std::size_t n) {
  std::set<std::vector<Code>> seen;
  const std::uint64_t q = f.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  for (std::uint64_t a = 0; a < total; ++a) {
    for (std::uint64_t b = 0; b < total; ++b) {
      FieldMatrix m(f, 2, n);
      std::uint64_t x = a, y = b;
      for (std::size_t j = 0; j < n; ++j) {
        m.at(0, j) = x % q;
        m.at(1, j) = y % q;
        x /= q;
        y /= q;
      }
      if (m.rank() != 2) continue;
      m.rref();
      seen.insert(flat(m));
    }
  }
  return seen.size();
}

const CensusRecord* find(const Census& c, const Poly& disc) {
  for (const auto& r : c.records) {
    if (r.disc == disc) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("plane counts") {
  CHECK(gaussian_binomial(3, 2, 3) == 13);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(2, 2, 5) == 1);
  CHECK(gaussian_binomial(3, 0, 7) == 1);
  CHECK(gaussian_binomial(2, 3, 7) == 0);
  CHECK(count_echelon_planes(F3, 3) == 13);
  for (auto f : {F2, F3, F4, make_field(5), make_field(7), make_field(2, 3), F9}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      CAPTURE(f.name());
      CAPTURE(n);
      CHECK(count_echelon_planes(f, n) == gaussian_binomial(n, 2, f.size()));
      std::uint64_t visited = 0;
      for_each_echelon_plane(f, n, [&](std::uint64_t index, const Vec&, const Vec&) { CHECK(index == visited++); });
      CHECK(visited == gaussian_binomial(n, 2, f.size()));
    }
  }
  for (auto f : {F2, F3, F4}) {
    for (std::size_t n = 2; n <= 4; ++n) CHECK(brute_planes(f, n) == gaussian_binomial(n, 2, f.size()));
  }
  CHECK(count_top_degree_planes(F3, 2) == 13 - 1);
  CHECK(count_top_degree_planes(F3, 3) == gaussian_binomial(4, 2, 3) - gaussian_binomial(3, 2, 3));
}

TEST_CASE("census examples") {
  const Census c32 = census_by_disc(F3, 2);
  CHECK(c32.total_classes == 9);
  CHECK(c32.records.size() == 9);
  CHECK(c32.planes_searched == 12);
  for (const auto& r : c32.records) {
    CHECK(r.class_count == 1);
    CHECK(r.length_multiset == std::vector<int>{1, 1});
    CHECK(r.tangent_dims == std::map<std::size_t, std::uint64_t>{{0, 1}});
    CHECK_FALSE(r.wild);
  }
  CHECK(enumerate_covers(F3, 2).size() == 9);

  const Census c31 = census_by_disc(F3, 1);
  CHECK(c31.total_classes == 1);
  REQUIRE(c31.records.size() == 1);
  CHECK(c31.records[0].disc.is_one());

  const Census c22 = census_by_disc(F2, 2);
  CHECK(c22.total_classes > 0);
  for (const auto& r : c22.records) {
    CHECK(r.wild);
    for (int l : r.length_multiset) CHECK(l != 1);
  }
}

TEST_CASE("census matches exhaustion over pairs") {
  for (auto [f, d] : std::vector<std::pair<FieldSpec, int>>{{F3, 2}, {F3, 3}, {F2, 3}, {F2, 4}, {F4, 2}}) {
    CAPTURE(f.name());
    CAPTURE(d);
    CensusOptions o;
    o.tangent = false;
    const Census c = census_by_disc(f, d, o);
    const auto want = classes_by_pairs(f, d);
    CHECK(c.records.size() == want.size());
    std::uint64_t total = 0;
    for (const auto& r : c.records) {
      REQUIRE(want.count(r.disc) == 1);
      CHECK(r.class_count == want.at(r.disc));
      total += r.class_count;
    }
    CHECK(total == c.total_classes);
  }
}

TEST_CASE("every census class satisfies Riemann-Hurwitz") {
  for (auto [f, d] : std::vector<std::pair<FieldSpec, int>>{{F2, 3}, {F3, 4}, {make_field(5), 3}, {F4, 3}, {F9, 3}}) {
    CensusOptions o;
    o.tangent = false;
    o.max_ext = 4;
    const Census c = census_by_disc(f, d, o);
    for (const auto& r : c.records) {
      if (!r.split()) continue;
      CHECK(r.lengths.total() == 2 * d - 2);
      CHECK(differential_lengths(r.representative, 4) == r.lengths);
    }
  }
}

TEST_CASE("census is deterministic and thread independent") {
  CensusOptions one;
  CensusOptions many;
  many.threads = 4;
  const Census a = census_by_disc(F3, 4, one);
  const Census b = census_by_disc(F3, 4, one);
  const Census c = census_by_disc(F3, 4, many);
  for (const Census* x : {&b, &c}) {
    CHECK(x->total_classes == a.total_classes);
    REQUIRE(x->records.size() == a.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(x->records[i].disc == a.records[i].disc);
      CHECK(x->records[i].class_count == a.records[i].class_count);
      CHECK(x->records[i].tangent_dims == a.records[i].tangent_dims);
      CHECK(x->records[i].representative == a.records[i].representative);
      CHECK(x->records[i].representative_index == a.records[i].representative_index);
    }
  }
}

TEST_CASE("class counts are transported by source automorphisms") {
  for (auto [f, d] : std::vector<std::pair<FieldSpec, int>>{{F3, 2}, {make_field(5), 3}, {F9, 2}}) {
    CAPTURE(f.name());
    CensusOptions o;
    o.tangent = false;
    const Census c = census_by_disc(f, d, o);
    const std::uint32_t p = f.characteristic();
    int checked = 0;
    for (const auto& r : c.records) {
      if (!r.split() || r.lengths.entries().size() > 3 || !r.tame_lengths(p)) continue;
      for (const Mobius& m : oracle::all_mobius(f)) {
        const Cover moved = precompose(r.representative, m);
        const CensusRecord* other = find(c, discriminant(moved));
        REQUIRE(other != nullptr);
        CHECK(other->class_count == r.class_count);
        CHECK(other->length_multiset == r.length_multiset);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("tame classes are rigid in characteristic 2 and 3") {
  for (auto [f, d] : std::vector<std::pair<FieldSpec, int>>{{F3, 2}, {F3, 3}, {F3, 4}, {F9, 3}}) {
    CAPTURE(f.name());
    CAPTURE(d);
    const TheoremReport t = verify_theorem_char23(f, d);
    CHECK(t.violations.empty());
    CHECK(t.tame_classes + t.wild_classes + t.unchecked_classes == t.census.total_classes);
    for (const auto& [dim, n] : t.wild_dims) CHECK(dim >= 1);
  }
  for (int d = 2; d <= 3; ++d) {
    for (auto f : {F2, F4}) {
      const TheoremReport t = verify_theorem_char23(f, d);
      CHECK(t.violations.empty());
      CHECK(t.length_one_points == 0);
      CHECK(t.tame_classes == 0);
    }
  }
  CHECK_THROWS_AS(verify_theorem_char23(make_field(5), 2), ValidationError);
}

TEST_CASE("wild record at x^3 (x+1)^3") {
  const Census c = census_by_disc(F3, 4);
  const CensusRecord* r = find(c, Poly::parse(F3, "x^6 + x^3"));
  REQUIRE(r != nullptr);
  CHECK(r->wild);
  CHECK(r->class_count >= 1);
  for (const auto& [dim, n] : r->tangent_dims) CHECK(dim >= 1);
  for (const auto& rec : c.records) {
    if (!rec.wild) continue;
    for (const auto& [dim, n] : rec.tangent_dims) CHECK(dim >= 1);
  }
}

TEST_CASE("Galois orbits") {
  const Census c = census_by_disc(F9, 2);
  double weighted = 0;
  for (const auto& r : c.records) {
    const Poly frob(F9, [&] {
      std::vector<Code> v;
      for (Code a : r.disc.coeffs()) v.push_back(F9.frobenius(a));
      return v;
    }());
    CHECK(r.galois_orbit == (frob == r.disc ? 1u : 2u));
    weighted += static_cast<double>(r.class_count) / static_cast<double>(r.galois_orbit);
  }
  CHECK(c.classes_up_to_galois == doctest::Approx(weighted));
  for (const auto& r : census_by_disc(F3, 3).records) CHECK(r.galois_orbit == 1);
}

TEST_CASE("Xli statistics only on split records") {
  CensusOptions o;
  o.xli = true;
  const Census c = census_by_disc(F3, 3, o);
  for (const auto& r : c.records) {
    std::uint64_t n = 0;
    for (const auto& [dim, k] : r.tangent_dims_xli) n += k;
    if (r.split()) {
      CHECK(n == r.class_count);
    } else {
      CHECK(n == 0);
    }
  }
}

TEST_CASE("budget") {
  CensusOptions o;
  o.budget = 10;
  CHECK_THROWS_AS(census_by_disc(F3, 3, o), BudgetError);
  CHECK_THROWS_AS(enumerate_covers(F3, 3, 10), BudgetError);
}
