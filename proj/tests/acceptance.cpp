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

// Acceptance suite: one [PASS]/[FAIL] line per criterion. A criterion passes
// when every check holds and it finishes within its time limit.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramify/cartier.hpp"
#include "ramify/census.hpp"
#include "ramify/cover.hpp"
#include "ramify/deform.hpp"
#include "ramify/error.hpp"
#include "ramify/family.hpp"

using namespace ramify;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_ < 5) notes_ << (failures_ ? "; " : "") << what;
    ++failures_;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    std::ostringstream os;
    os << failures_ << " failed check(s): " << notes_.str();
    return {false, os.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> body;
};

constexpr int kMaxExt = 2;

const FieldSpec F2 = make_field(2);
const FieldSpec F3 = make_field(3);
const FieldSpec F4 = make_field(2, 2);
const FieldSpec F5 = make_field(5);
const FieldSpec F9 = make_field(3, 2);

Poly P(FieldSpec f, const char* s) { return Poly::parse(f, s); }
Cover C(FieldSpec f, const char* s) { return Cover::parse(f, s); }

std::vector<Poly> all_polys(FieldSpec f, int max_degree) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (int i = 0; i <= max_degree; ++i) total *= f.size();
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Code> c(static_cast<std::size_t>(max_degree) + 1);
    std::uint64_t rest = code;
    for (auto& x : c) {
      x = rest % f.size();
      rest /= f.size();
    }
    out.emplace_back(f, std::move(c));
  }
  return out;
}

// x^n goes to slot n mod p at X^(n div p).
PolyVec split_by_residue(const Poly& q) {
  const std::size_t p = q.field().characteristic();
  std::vector<std::vector<Code>> slots(p);
  for (std::size_t n = 0; n < q.coeffs().size(); ++n) {
    auto& s = slots[n % p];
    if (s.size() <= n / p) s.resize(n / p + 1, 0);
    s[n / p] = q.coeff(n);
  }
  PolyVec out;
  for (auto& s : slots) out.emplace_back(q.field(), std::move(s));
  return out;
}

bool proportional(const PolyVec& u, const PolyVec& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    }
  return true;
}

int zero_order(const Poly& a) {
  int k = 0;
  while (a.coeff(static_cast<std::size_t>(k)) == 0) ++k;
  return k;
}

// l at infinity read off at 0 after x -> 1/x.
int length_at_infinity_by_inversion(const Cover& c) {
  const FieldSpec f = c.field();
  return zero_order(raw_discriminant(precompose(c, Mobius(f, 0, 1, 1, 0))));
}

std::map<Poly, const CensusRecord*> index_records(const Census& c) {
  std::map<Poly, const CensusRecord*> out;
  for (const auto& r : c.records) out[r.disc] = &r;
  return out;
}

// ---------------------------------------------------------------- criteria

Outcome discriminants() {
  Checker ck;
  const Poly x = P(F3, "x");
  const Poly x1 = P(F3, "x + 1");
  ck.expect(discriminant(C(F3, "x^5 + x")) == P(F3, "x^4 + 2"), "disc(x^5 + x)");
  ck.expect(discriminant(C(F3, "x^4")) == P(F3, "x^3"), "disc(x^4)");
  ck.expect(discriminant(C(F3, "x^4 / x^3+x+1")) == x.pow(3) * x1.pow(3), "disc(x^4/(x^3+x+1))");
  return ck.done("x^4 + 2, x^3, x^3 (x+1)^3");
}

Outcome riemann_hurwitz() {
  Checker ck;
  std::uint64_t covers = 0;
  const std::vector<std::pair<FieldSpec, int>> cases = {
      {F2, 1}, {F2, 2}, {F2, 3}, {F4, 1}, {F4, 2}, {F4, 3}, {make_field(2, 3), 1}, {make_field(2, 3), 2},
      {make_field(2, 3), 3}, {F3, 1}, {F3, 2}, {F3, 3}, {F3, 4}, {F9, 1}, {F9, 2}, {F9, 3}, {F9, 4},
      {F5, 1}, {F5, 2}, {F5, 3}};
  for (auto [f, d] : cases) {
    for (const Cover& c : enumerate_covers(f, d)) {
      const LengthsResult lr = differential_lengths_partial(c, kMaxExt);
      int finite = 0;
      for (const auto& [pt, l] : lr.divisor.entries()) {
        if (!pt.is_infinity()) finite += l;
      }
      const int total = finite + lr.residual.degree() + length_at_infinity_by_inversion(c);
      ck.expect(total == 2 * d - 2, c.to_string() + " over " + f.name());
      ++covers;
    }
  }
  return ck.done(std::to_string(covers) + " census covers, zero violations");
}

Outcome family_invariance() {
  Checker ck;
  const auto ts = sample_parameters(F9, 0, 0);
  const FamilyReport o = verify_family(osserman_family(3), ts, kMaxExt);
  ck.expect(o.fibers.size() == 9 && o.skipped.empty(), "osserman: 9 fibers");
  ck.expect(o.disc_constant, "osserman: disc constant");
  ck.expect(o.length_divisor_constant, "osserman: lengths constant");
  ck.expect(o.pairwise_inequivalent, "osserman: pairwise inequivalent");
  for (const auto& fib : o.fibers) ck.expect(fib.disc == P(F9, "x^4 + 2"), "osserman: disc x^4 + 2");

  const FamilyReport w = verify_family(power_family(3), ts, kMaxExt);
  ck.expect(w.fibers.size() == 9 && w.skipped.empty(), "power: 9 fibers");
  ck.expect(w.disc_constant, "power: disc constant");
  ck.expect(w.length_divisor_constant, "power: lengths constant");
  ck.expect(w.pairwise_inequivalent, "power: pairwise inequivalent");
  std::size_t zero = w.support.size();
  for (std::size_t i = 0; i < w.support.size(); ++i) {
    if (!w.support[i].is_infinity() && w.support[i].value().code() == 0) zero = i;
  }
  ck.expect(zero < w.support.size(), "power: 0 in support");
  if (zero < w.support.size()) {
    for (const auto& fib : w.fibers) {
      const int want = fib.t.code() == 0 ? 4 : 3;
      ck.expect(fib.ram[zero].e == want, "power: e_0 at t = " + fib.t.to_string());
    }
  }
  return ck.done("osserman(3) and power(3) over all of F_9");
}

Outcome cartier_structure() {
  Checker ck;
  std::uint64_t examined = 0;
  auto check = [&](const Poly& f) {
    const std::size_t p = f.field().characteristic();
    const Subspace k = kernel_T(f);
    ck.expect(k.dim == 1, "dim ker T_f = 1 at " + f.to_string());
    if (k.dim == 1) ck.expect(proportional(k.basis[0], split_by_residue(f)), "kernel spanned by " + f.to_string());
    ck.expect(image_T(f).dim == p - 1, "dim im T_f = p - 1 at " + f.to_string());
    if (p == 2) {
      for (const Poly& q : {Poly::constant(f.field(), 1), Poly::x(f.field())}) {
        const Poly t = apply_T(f, q);
        for (std::size_t n = 1; n < t.coeffs().size(); n += 2) ck.expect(t.coeff(n) == 0, "image in k(x^2)");
      }
    }
    ++examined;
  };
  for (const Poly& f : all_polys(F2, 4)) check(f);
  for (const Poly& f : all_polys(F3, 4)) check(f);
  std::mt19937_64 rng(20260101);
  std::vector<Poly> f5;
  while (f5.size() < 200) {
    std::vector<Code> c(1 + rng() % 8);
    for (auto& x : c) x = rng() % 5;
    Poly f(F5, c);
    if (!f.is_zero()) f5.push_back(std::move(f));
  }
  for (const Poly& f : f5) check(f);
  for (std::size_t i = 0; i + 1 < f5.size(); ++i) {
    ck.expect(apply_T(f5[i], f5[i + 1]) == -apply_T(f5[i + 1], f5[i]), "antisymmetry");
  }
  const auto f3 = all_polys(F3, 2);
  for (const Poly& a : f3)
    for (const Poly& b : f3) ck.expect(apply_T(a, b) == -apply_T(b, a), "antisymmetry");
  return ck.done(std::to_string(examined) + " polynomials");
}

Outcome tame_rigidity() {
  Checker ck;
  std::uint64_t tame = 0;
  for (FieldSpec f : {F3, F9}) {
    for (int d = 1; d <= 4; ++d) {
      const TheoremReport t = verify_theorem_char23(f, d);
      ck.expect(t.violations.empty(), "violation over " + f.name() + " d = " + std::to_string(d));
      ck.expect(t.unchecked_classes == 0, "unchecked classes over " + f.name());
      tame += t.tame_classes;
    }
  }
  std::uint64_t points = 0;
  for (FieldSpec f : {F2, F4}) {
    for (int d = 1; d <= 3; ++d) {
      CensusOptions o;
      o.tangent = false;
      o.max_ext = 6;
      const Census c = census_by_disc(f, d, o);
      for (const auto& r : c.records) {
        ck.expect(r.split(), "unsplit record over " + f.name());
        for (int l : r.length_multiset) {
          ck.expect(l != 1, "length 1 over " + f.name());
          ++points;
        }
      }
    }
  }
  return ck.done(std::to_string(tame) + " tame classes with dim 0; " + std::to_string(points) +
                 " char-2 branch points, none of length 1");
}

struct WildClass {
  NormalizedCover base;
  TangentSpace space;
};

std::vector<WildClass> wild_classes_f3() {
  std::vector<WildClass> out;
  for (int d = 1; d <= 4; ++d) {
    CensusOptions o;
    o.tangent = false;
    const Census c = census_by_disc(F3, d, o);
    const auto idx = index_records(c);
    for (const Cover& cover : enumerate_covers(F3, d)) {
      const auto it = idx.find(discriminant(cover));
      if (it == idx.end() || !it->second->wild) continue;
      NormalizedCover nc = normalize(cover, kMaxExt);
      TangentSpace s = tangent_space(nc, Variant::kXD, kMaxExt);
      out.push_back({std::move(nc), std::move(s)});
    }
  }
  return out;
}

Outcome wild_witness() {
  Checker ck;
  const auto wild = wild_classes_f3();
  for (const auto& w : wild) ck.expect(w.space.dim >= 1, "dim >= 1 at " + w.base.cover.to_string());
  const Family fam = wild_family(C(F3, "x^4 / x^3+x+1"), kMaxExt);
  const FamilyDirection dir = family_direction(fam, kMaxExt);
  ck.expect(!(dir.tangent.g1.is_zero() && dir.tangent.h1.is_zero()), "family direction non-zero");
  const LiftResult lift = lift_deformation(dir.base, dir.tangent, 4);
  ck.expect(lift.success, "lift to t^4");
  if (lift.success) {
    const auto dd = deformed_discriminant(dir.base.cover.g(), dir.base.cover.h(), lift.corrections, 4);
    for (std::size_t r = 1; r < dd.size(); ++r) ck.expect(dd[r].is_zero(), "t^" + std::to_string(r) + " term");
  }
  return ck.done(std::to_string(wild.size()) + " wild classes with dim >= 1; family direction lifts to N = 4");
}

Outcome oracle_agreement() {
  Checker ck;
  std::uint64_t covers = 0;
  for (int d = 1; d <= 3; ++d) {
    const auto polys = all_polys(F3, d);
    for (const Poly& g : polys)
      for (const Poly& h : polys) {
        if (std::max(g.degree(), h.degree()) != d) continue;
        if (gcd(g, h).degree() > 0) continue;
        if ((h * derivative(g) - g * derivative(h)).is_zero()) continue;
        const NormalizedCover nc = normalize(Cover::make(g, h), kMaxExt);
        const std::size_t dim = tangent_dim(nc, Variant::kXD, kMaxExt);
        ck.expect(brute_force_tangent(nc, Variant::kXD, kMaxExt).dim == dim, "oracle at " + nc.cover.to_string());
        ++covers;
      }
  }
  const NormalizedCover b = normalize(C(F3, "x^4 / x^3+x+1"), kMaxExt);
  const BruteForceResult bf = brute_force_tangent(b, Variant::kXD, kMaxExt);
  ck.expect(bf.searched == 729, "search space 3^6");
  ck.expect(bf.dim == tangent_dim(b, Variant::kXD, kMaxExt), "oracle at x^4/(x^3+x+1)");
  ++covers;
  return ck.done(std::to_string(covers) + " covers; x^4/(x^3+x+1) dim " + std::to_string(bf.dim));
}

Outcome census_counts() {
  Checker ck;
  const Census c = census_by_disc(F3, 2);
  ck.expect(c.total_classes == 9, "9 classes");
  const std::uint64_t q = 3;
  const std::uint64_t admissible = (q + 1) * q / 2 + (q * q - q) / 2;
  ck.expect(c.records.size() == admissible, "one record per admissible branch divisor");
  for (const auto& r : c.records) ck.expect(r.class_count == 1, "one class per divisor");
  const std::uint64_t closed = (q * q * q - 1) * (q * q * q - q) / ((q * q - 1) * (q * q - q));
  ck.expect(count_echelon_planes(F3, 3) == closed, "Gr(2,3)(F_3) count");
  ck.expect(closed == 13, "13 planes");
  return ck.done("9 classes over 9 divisors; 13 raw planes");
}

Outcome shape_structure() {
  Checker ck;
  std::uint64_t vectors = 0;
  for (const auto& w : wild_classes_f3()) {
    for (const auto& v : w.space.basis) {
      if (v.g1.is_zero() && v.h1.is_zero()) continue;
      const auto s = solve_shape(w.base, v);
      ck.expect(s.has_value(), "shape at " + w.base.cover.to_string());
      if (!s) continue;
      const Poly& g = w.base.cover.g();
      const Poly& h = w.base.cover.h();
      const Poly an = expand_in_xp(s->alpha.num), ad = expand_in_xp(s->alpha.den);
      const Poly bn = expand_in_xp(s->beta.num), bd = expand_in_xp(s->beta.den);
      const Poly cn = expand_in_xp(s->gamma.num), cd = expand_in_xp(s->gamma.den);
      ck.expect(!ad.is_zero() && !bd.is_zero() && !cd.is_zero(), "non-zero denominators");
      ck.expect(v.g1 * ad * bd == an * bd * h + bn * ad * g, "g1 = alpha h + beta g");
      ck.expect(v.h1 * cd * bd == cn * bd * g - bn * cd * h, "h1 = gamma g - beta h");
      ++vectors;
    }
  }
  return ck.done(std::to_string(vectors) + " basis vectors");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "discriminant exactness", 1.0, discriminants},
      {2, "Riemann-Hurwitz conservation", 60.0, riemann_hurwitz},
      {3, "family invariance", 5.0, family_invariance},
      {4, "Cartier operator structure", 120.0, cartier_structure},
      {5, "tame rigidity in characteristic 2 and 3", 300.0, tame_rigidity},
      {6, "wild classes deform", 120.0, wild_witness},
      {7, "oracle agreement", 60.0, oracle_agreement},
      {8, "census exact counts", 1.0, census_counts},
      {9, "characteristic 3 deformation shape", 60.0, shape_structure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %d %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                secs, c.limit_seconds, in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
