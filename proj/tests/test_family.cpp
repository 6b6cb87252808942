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

#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "ramify/error.hpp"
#include "ramify/family.hpp"

using namespace ramify;

namespace {

const FieldSpec F3 = make_field(3);
const FieldSpec F5 = make_field(5);
const FieldSpec F9 = make_field(3, 2);

Cover C(FieldSpec f, const char* s) { return Cover::parse(f, s); }
Poly P(FieldSpec f, const char* s) { return Poly::parse(f, s); }

Poly monic_disc(const Cover& c) { return monic(c.h() * derivative(c.g()) - c.g() * derivative(c.h())); }

// Order of vanishing of g at 0 when h(0) != 0 and g(0) = 0.
int order_at_zero(const Poly& g) {
  int k = 0;
  while (g.coeff(static_cast<std::size_t>(k)) == 0) ++k;
  return k;
}

bool has_wild_length(const Cover& c) {
  for (int l : length_multiset(c)) {
    if (l >= static_cast<int>(c.field().characteristic())) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("wild family examples") {
  const Family a = wild_family(C(F3, "x^4"), 2);
  CHECK(a.description == "x^4 + t*x^3");
  CHECK(a.specialize(2) == C(F3, "x^4 + 2*x^3"));
  const Family b = wild_family(C(F3, "x^5 + x"), 2);
  CHECK(b.description == "x^5 + t*x^3 + x");
  CHECK(b.specialize(1) == C(F3, "x^5 + x^3 + x"));
  CHECK_THROWS_AS(wild_family(C(F3, "(x^2+1)/x"), 2), ValidationError);
}

TEST_CASE("named families") {
  const Family o3 = osserman_family(3);
  CHECK(o3.description == "x^5 + t*x^3 + x");
  for (Code t = 0; t < 3; ++t) CHECK(monic_disc(o3.specialize(t)) == P(F3, "x^4 + 2"));
  const Family o5 = osserman_family(5);
  CHECK(o5.specialize(0) == C(F5, "x^7 + x"));
  for (Code t = 0; t < 5; ++t) CHECK(monic_disc(o5.specialize(t)) == P(F5, "x^6 + 3"));
  CHECK_THROWS_AS(osserman_family(2), ValidationError);
  CHECK_THROWS_AS(osserman_family(4), ValidationError);
  const Family pw = power_family(3);
  for (Code t = 0; t < 3; ++t) CHECK(monic_disc(pw.specialize(t)) == P(F3, "x^3"));
  CHECK(describe_pencil(P(F3, "x^4"), P(F3, "x^3"), P(F3, "1"), Poly(F3)) == "x^4 + t*x^3");
}

TEST_CASE("power family report") {
  const Family pw = power_family(3);
  const FamilyReport r = verify_family(pw, sample_parameters(F3, 0, 1), 2);
  CHECK(r.disc_constant);
  CHECK(r.length_divisor_constant);
  CHECK(r.degree_constant);
  CHECK(r.pairwise_inequivalent);
  REQUIRE(r.fibers.size() == 3);
  const Divisor& l0 = r.fibers[0].lengths;
  CHECK(l0.multiplicity(Point(F3.element(0))) == 3);
  CHECK(l0.multiplicity(Point::infinity()) == 3);
  std::size_t zero = r.support.size();
  for (std::size_t i = 0; i < r.support.size(); ++i) {
    if (!r.support[i].is_infinity() && r.support[i].value().code() == 0) zero = i;
  }
  REQUIRE(zero < r.support.size());
  for (const auto& fiber : r.fibers) {
    const int e = order_at_zero(fiber.cover.g());
    CHECK(fiber.ram[zero].e == e);
    CHECK(e == (fiber.t.code() == 0 ? 4 : 3));
    CHECK(fiber.ram[zero].wild == (e % 3 == 0));
  }
}

TEST_CASE("osserman family over F_9") {
  const FamilyReport r = verify_family(osserman_family(3), sample_parameters(F9, 0, 1), 2, 2);
  CHECK(r.fibers.size() == 9);
  CHECK(r.disc_constant);
  CHECK(r.length_divisor_constant);
  CHECK(r.pairwise_inequivalent);
  CHECK(r.equivalent_pairs.empty());
  const Divisor& l = r.fibers[3].lengths;
  CHECK(l.multiplicity(Point::infinity()) == 4);
  CHECK(l.entries().size() == 5);
  for (const auto& [pt, m] : l.entries()) {
    if (!pt.is_infinity()) CHECK(m == 1);
  }
}

TEST_CASE("constant family is not inequivalent") {
  const Family k = constant_family(C(F3, "x^2"));
  const FamilyReport r = verify_family(k, sample_parameters(F3, 0, 1), 2);
  CHECK(r.disc_constant);
  CHECK_FALSE(r.pairwise_inequivalent);
  CHECK(r.equivalent_pairs.size() == 3);
}

TEST_CASE("parameter sampling") {
  CHECK(sample_parameters(F9, 0, 1).size() == 9);
  CHECK(sample_parameters(F9, 20, 1).size() == 9);
  const auto a = sample_parameters(make_field(3, 4), 10, 7);
  const auto b = sample_parameters(make_field(3, 4), 10, 7);
  REQUIRE(a.size() == 10);
  std::set<Code> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    seen.insert(a[i].code());
    if (i > 0) CHECK(a[i - 1].code() < a[i].code());
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("wild families keep the discriminant and separate their fibers") {
  std::mt19937_64 rng(21);
  int families = 0;
  const auto ts = sample_parameters(F9, 0, 1);
  for (int i = 0; i < 400 && families < 12; ++i) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const Cover c = oracle::random_cover(F3, d, rng);
    try {
      if (!has_wild_length(c)) continue;
    } catch (const SplittingError&) {
      continue;
    }
    const Family f = wild_family(c, 2);
    ++families;
    CAPTURE(c.to_string());
    CAPTURE(f.description);
    CHECK(f.specialize(0) == postcompose(precompose(f.origin, f.source_change), f.target_change));
    const Poly disc = monic_disc(f.specialize(ts[0]));
    const auto bad = f.degenerate_parameter();
    std::vector<Cover> fibers;
    for (const auto& t : ts) {
      if (bad && Point(t) == Point(*bad)) {
        CHECK_THROWS_AS(f.specialize(t), ValidationError);
        continue;
      }
      const Cover ct = f.specialize(t);
      CHECK(ct.degree() == d);
      CHECK(gcd(ct.g(), ct.h()).degree() == 0);
      CHECK(monic_disc(ct) == disc);
      fibers.push_back(ct);
    }
    for (std::size_t a = 0; a < fibers.size(); ++a)
      for (std::size_t b = a + 1; b < fibers.size(); ++b) CHECK_FALSE(equivalent(fibers[a], fibers[b]).has_value());
    const Family back = f.in_original_coordinates();
    CHECK(back.specialize(0) == c.embed(back.param_field));
    const FamilyReport r = verify_family(f, ts, 2);
    CHECK(r.fibers.size() + r.skipped.size() == ts.size());
    CHECK(r.skipped.size() == (bad ? 1u : 0u));
    CHECK(r.disc_constant);
    CHECK(r.length_divisor_constant);
    CHECK(r.pairwise_inequivalent);
  }
  CHECK(families >= 5);
}

TEST_CASE("wild point of index p gives one degenerate fiber") {
  // infinity has e = 3 = p: the x^3 coefficient is 1 + t
  const Cover c = C(F3, "x^3 + x / 1");
  const Family f = wild_family(c, 2);
  REQUIRE(f.degenerate_parameter().has_value());
  CHECK(f.degenerate_parameter()->code() == 2);
  CHECK_THROWS_AS(f.specialize(2), ValidationError);
  CHECK(f.specialize(1) == C(F3, "2*x^3 + x"));
  const FamilyReport r = verify_family(f, sample_parameters(F9, 0, 1), 2);
  CHECK(r.skipped.size() == 1);
  CHECK(r.fibers.size() == 8);
  CHECK(r.disc_constant);
  CHECK_FALSE(wild_family(C(F3, "x^4"), 2).degenerate_parameter().has_value());
  CHECK_FALSE(osserman_family(3).degenerate_parameter().has_value());
}

TEST_CASE("family direction is a first-order deformation") {
  std::mt19937_64 rng(22);
  int seen = 0;
  std::vector<Cover> covers{C(F3, "x^4"), C(F3, "x^5 + x"), C(F3, "x^4 / x^3+x+1")};
  for (int i = 0; i < 300 && covers.size() < 12; ++i) {
    const Cover c = oracle::random_cover(F3, 3 + static_cast<int>(rng() % 3), rng);
    try {
      if (has_wild_length(c)) covers.push_back(c);
    } catch (const SplittingError&) {
    }
  }
  for (const Cover& c : covers) {
    CAPTURE(c.to_string());
    const Family f = wild_family(c, 2);
    const FamilyDirection dir = family_direction(f, 2);
    CHECK(is_chart_form(dir.base.cover));
    CHECK_FALSE((dir.tangent.g1.is_zero() && dir.tangent.h1.is_zero()));
    const Poly& g = dir.base.cover.g();
    const Poly& h = dir.base.cover.h();
    const Poly w1 = dir.tangent.h1 * derivative(g) + h * derivative(dir.tangent.g1) - dir.tangent.g1 * derivative(h) -
                    g * derivative(dir.tangent.h1);
    CHECK(w1.is_zero());
    CHECK(tangent_dim(dir.base, Variant::kXD, 2) >= 1);
    const LiftResult lift = lift_deformation(dir.base, dir.tangent, 4);
    CHECK(lift.success);
    ++seen;
  }
  CHECK(seen >= 3);
}
