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

#include "doctest.h"
#include "oracle.hpp"
#include "ramify/error.hpp"
#include "ramify/poly.hpp"

using namespace ramify;

namespace {

Poly P(FieldSpec f, const char* s) { return Poly::parse(f, s); }

}  // namespace

TEST_CASE("hand-checked polynomial arithmetic") {
  const FieldSpec f3 = make_field(3);
  CHECK(gcd(P(f3, "x^2 + 2"), P(f3, "x + 1")) == P(f3, "x + 1"));
  CHECK(gcd(P(f3, "2*x^2 + 1"), Poly(f3)) == P(f3, "x^2 + 2"));
  CHECK(gcd(Poly(f3), Poly(f3)).is_zero());
  CHECK(P(f3, "x^3 + x + 1") * P(f3, "x^3") - P(f3, "x^4") == P(f3, "x^6 + x^3"));
  const DivRem qr = divrem(P(f3, "x^4 + 2"), P(f3, "x^2 + 1"));
  CHECK(qr.quotient == P(f3, "x^2 + 2"));
  CHECK(qr.remainder.is_zero());
  CHECK_THROWS_AS(divrem(P(f3, "x"), Poly(f3)), ValidationError);
  CHECK_THROWS_AS(P(f3, "x") + P(make_field(5), "x"), ValidationError);
  CHECK_THROWS_AS(exact_div(P(f3, "x^2"), P(f3, "x + 1")), ValidationError);
}

TEST_CASE("derivative and monic") {
  const FieldSpec f2 = make_field(2);
  const FieldSpec f3 = make_field(3);
  const FieldSpec f5 = make_field(5);
  CHECK(derivative(P(f3, "x^3")).is_zero());
  CHECK(derivative(P(f3, "x^5 + x")) == P(f3, "2*x^4 + 1"));
  CHECK(derivative(P(f2, "x^3 + x^2 + 1")) == P(f2, "x^2"));
  CHECK(monic(P(f3, "2*x^4 + 1")) == P(f3, "x^4 + 2"));
  CHECK(monic(P(f3, "x^3")) == P(f3, "x^3"));
  CHECK(monic(P(f5, "2*x^6 + 1")) == P(f5, "x^6 + 3"));
  CHECK_THROWS_AS(monic(Poly(f3)), ValidationError);
}

TEST_CASE("degree is additive and gcd divides exactly") {
  std::mt19937_64 rng(3);
  for (auto f : {make_field(2), make_field(3), make_field(3, 2), make_field(5), make_field(2, 3)}) {
    for (int i = 0; i < 200; ++i) {
      const Poly a = oracle::random_poly(f, static_cast<int>(rng() % 6), rng);
      const Poly b = oracle::random_poly(f, static_cast<int>(rng() % 6), rng);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK((a * b).degree() == a.degree() + b.degree());
      const Poly g = gcd(a, b);
      CHECK(g.lead() == 1);
      CHECK(divrem(a, g).remainder.is_zero());
      CHECK(divrem(b, g).remainder.is_zero());
      const Poly c = oracle::random_poly(f, 2, rng, true);
      CHECK(divrem(gcd(a * c, b * c), c).remainder.is_zero());
      const DivRem qr = divrem(a, b);
      CHECK(qr.quotient * b + qr.remainder == a);
      CHECK(qr.remainder.degree() < b.degree());
    }
  }
}

TEST_CASE("Leibniz rule") {
  std::mt19937_64 rng(5);
  for (auto f : {make_field(2), make_field(3), make_field(3, 2), make_field(5), make_field(7)}) {
    for (int i = 0; i < 200; ++i) {
      const Poly a = oracle::random_poly(f, static_cast<int>(rng() % 9), rng);
      const Poly b = oracle::random_poly(f, static_cast<int>(rng() % 9), rng);
      CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
    }
  }
}

TEST_CASE("p-th powers have zero derivative") {
  for (auto f : {make_field(2), make_field(3)}) {
    const Code q = f.size();
    const std::uint64_t total = q * q * q * q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Code> c(4);
      std::uint64_t r = idx;
      for (auto& x : c) {
        x = r % q;
        r /= q;
      }
      const Poly a(f, c);
      const Poly ap = a.pow(f.characteristic());
      REQUIRE(derivative(ap).is_zero());
      REQUIRE(pth_root(ap) == a);
    }
  }
}

TEST_CASE("text grammar round trip") {
  const FieldSpec f9 = make_field(3, 2);
  CHECK(P(f9, "[u+1]*x^2 + 2*x + 1").to_string() == "[u+1]*x^2 + 2*x + 1");
  CHECK(P(make_field(3), "x^4 + 2").to_string() == "x^4 + 2");
  CHECK(P(make_field(3), "x^2 - x - 1") == P(make_field(3), "x^2 + 2*x + 2"));
  CHECK(P(make_field(3), "  - x^2+x ") == P(make_field(3), "2*x^2 + x"));
  CHECK_THROWS_AS(P(make_field(3), "x*x"), ValidationError);
  CHECK(P(make_field(3), "0").is_zero());
  CHECK(P(make_field(3), "3*x + 1") == P(make_field(3), "1"));
  CHECK_THROWS_AS(P(make_field(3), "x^"), ValidationError);
  CHECK_THROWS_AS(P(make_field(3), "y + 1"), ValidationError);
  std::mt19937_64 rng(9);
  for (auto f : {make_field(2), make_field(3), make_field(3, 2), make_field(2, 4), make_field(5, 2)}) {
    for (int i = 0; i < 200; ++i) {
      const Poly a = oracle::random_poly(f, static_cast<int>(rng() % 8), rng);
      CHECK(Poly::parse(f, a.to_string()) == a);
      CHECK(Poly::parse(f, a.to_string('X'), 'X') == a);
    }
  }
}

TEST_CASE("squarefree and distinct-degree factorization") {
  std::mt19937_64 rng(13);
  for (auto f : {make_field(2), make_field(3), make_field(3, 2), make_field(5)}) {
    for (int i = 0; i < 150; ++i) {
      Poly a = oracle::random_poly(f, 1 + static_cast<int>(rng() % 3), rng, true);
      a = a * a.pow(f.characteristic()) * oracle::random_poly(f, static_cast<int>(rng() % 4), rng, true);
      if (a.degree() < 1) continue;
      Poly prod = Poly::constant(f, 1);
      const auto sf = squarefree_decomposition(a);
      for (std::size_t k = 0; k < sf.size(); ++k) {
        CHECK(sf[k].factor.lead() == 1);
        CHECK(gcd(sf[k].factor, derivative(sf[k].factor)).degree() == 0);
        for (std::size_t l = k + 1; l < sf.size(); ++l) CHECK(gcd(sf[k].factor, sf[l].factor).degree() == 0);
        prod *= sf[k].factor.pow(static_cast<std::uint64_t>(sf[k].multiplicity));
      }
      CHECK(prod == monic(a));
      for (const auto& s : sf) {
        Poly dd = Poly::constant(f, 1);
        for (const auto& part : distinct_degree_factorization(s.factor)) {
          CHECK(part.factor.degree() % part.degree == 0);
          dd *= part.factor;
        }
        CHECK(dd == s.factor);
      }
    }
  }
}

TEST_CASE("roots of the worked examples") {
  const FieldSpec f3 = make_field(3);
  const FieldSpec f9 = make_field(3, 2);
  const RootsResult r1 = roots_with_multiplicity(P(f3, "x^4 + 2"), 2);
  REQUIRE(r1.split());
  CHECK(r1.field == f9);
  std::vector<std::pair<std::string, int>> got;
  for (const auto& r : r1.roots) got.emplace_back(r.value.to_string(), r.multiplicity);
  CHECK(got == std::vector<std::pair<std::string, int>>{{"1", 1}, {"2", 1}, {"[u]", 1}, {"[2*u]", 1}});

  const RootsResult r2 = roots_with_multiplicity(P(f3, "x^3") * P(f3, "x + 1").pow(3), 2);
  REQUIRE(r2.roots.size() == 2);
  CHECK(r2.field == f3);
  CHECK(r2.roots[0].value.code() == 0);
  CHECK(r2.roots[0].multiplicity == 3);
  CHECK(r2.roots[1].value.code() == 2);
  CHECK(r2.roots[1].multiplicity == 3);

  const RootsResult r3 = roots_with_multiplicity(P(f3, "x^2 + 1"), 2);
  REQUIRE(r3.roots.size() == 2);
  CHECK(r3.roots[0].value.to_string() == "[u]");
  CHECK(r3.roots[1].value.to_string() == "[2*u]");

  // x^5 + x^2 + 1 is irreducible over F_2: nothing splits below degree 5
  const RootsResult r4 = roots_with_multiplicity(P(make_field(2), "x^5 + x^2 + 1"), 2);
  CHECK(r4.roots.empty());
  CHECK(r4.residual == P(make_field(2), "x^5 + x^2 + 1"));
  CHECK_FALSE(r4.split());
  CHECK(roots_with_multiplicity(P(make_field(2), "x^5 + x^2 + 1"), 5).split());
  CHECK_THROWS_AS(roots_with_multiplicity(Poly(f3), 2), ValidationError);
}

TEST_CASE("roots agree with exhaustive search and reconstruct the input") {
  std::mt19937_64 rng(17);
  for (auto f : {make_field(2), make_field(3), make_field(5), make_field(2, 2)}) {
    for (int i = 0; i < 60; ++i) {
      Poly a = oracle::random_poly(f, 1 + static_cast<int>(rng() % 5), rng);
      a = a * oracle::random_poly(f, 1 + static_cast<int>(rng() % 3), rng);
      if (a.is_zero() || a.degree() < 1) continue;
      const RootsResult rr = roots_with_multiplicity(a, 3);
      const FieldSpec big = rr.field;
      const Poly ab = a.embed(big);
      for (Code z = 0; z < big.size(); ++z) {
        int listed = 0;
        for (const auto& r : rr.roots) {
          if (r.value.code() == z) listed = r.multiplicity;
        }
        REQUIRE(listed == oracle::root_multiplicity(ab, z));
      }
      Poly prod = Poly::constant(big, f.embed(a.lead(), big));
      for (const auto& r : rr.roots) prod *= Poly(big, {big.neg(r.value.code()), 1}).pow(static_cast<std::uint64_t>(r.multiplicity));
      prod *= rr.residual.embed(big);
      CHECK(prod == ab);
    }
  }
}
