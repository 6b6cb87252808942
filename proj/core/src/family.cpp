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

#include "ramify/family.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "ramify/error.hpp"

namespace ramify {

namespace {

FieldSpec common_or_throw(FieldSpec a, FieldSpec b) {
  const auto f = common_field(a, b);
  if (!f) throw ValidationError("no common field for " + a.name() + " and " + b.name());
  return *f;
}

bool same_poly(const Poly& a, const Poly& b) {
  const FieldSpec f = common_or_throw(a.field(), b.field());
  return a.embed(f) == b.embed(f);
}

std::string pencil_coefficient(FieldSpec f, Code a, Code b) {
  if (b == 0) return f.format(a);
  const std::string bt = b == 1 ? "t" : f.format(b) + "*t";
  if (a == 0) return bt;
  return "(" + f.format(a) + " + " + bt + ")";
}

std::string pencil_side(const Poly& p0, const Poly& p1) {
  const FieldSpec f = p0.field();
  const int top = std::max(p0.degree(), p1.degree());
  std::string out;
  for (int k = top; k >= 0; --k) {
    const Code a = p0.coeff(static_cast<std::size_t>(k));
    const Code b = p1.coeff(static_cast<std::size_t>(k));
    if (a == 0 && b == 0) continue;
    const std::string c = pencil_coefficient(f, a, b);
    std::string term;
    if (k == 0) {
      term = c;
    } else {
      const std::string mono = k == 1 ? "x" : "x^" + std::to_string(k);
      term = c == "1" ? mono : c + "*" + mono;
    }
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

Family pencil_family(std::string description, const Cover& base, Poly g1, Poly h1) {
  const FieldSpec f = base.field();
  return {std::move(description), f,
          base.degree(), base.g(),
          std::move(g1), base.h(),
          std::move(h1), base,
          Mobius::identity(f), Mobius::identity(f)};
}

FieldSpec require_prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("characteristic must be prime, got " + std::to_string(p));
  return make_field(p);
}

}  // namespace

std::optional<FieldElement> Family::degenerate_parameter() const {
  const FieldSpec f = param_field;
  const auto top = static_cast<std::size_t>(degree);
  const Code a0 = g0.coeff(top), a1 = g1.coeff(top);
  const Code b0 = h0.coeff(top), b1 = h1.coeff(top);
  std::optional<Code> t;
  if (a1 != 0) {
    t = f.neg(f.div(a0, a1));
  } else if (a0 != 0) {
    return std::nullopt;
  }
  if (b1 != 0) {
    const Code s = f.neg(f.div(b0, b1));
    if (t && *t != s) return std::nullopt;
    t = s;
  } else if (b0 != 0) {
    return std::nullopt;
  }
  if (!t) return std::nullopt;
  return f.element(*t);
}

Cover Family::specialize(const FieldElement& t) const {
  const FieldSpec f = common_or_throw(param_field, t.field());
  const Code tc = t.embed(f).code();
  Cover c = Cover::make(g0.embed(f) + g1.embed(f).scale(tc), h0.embed(f) + h1.embed(f).scale(tc));
  if (c.degree() != degree) {
    throw ValidationError("fiber at t = " + t.to_string() + " has degree " + std::to_string(c.degree()) +
                           ", expected " + std::to_string(degree));
  }
  return c;
}

Family Family::in_original_coordinates() const {
  const Mobius s = source_change.inverse();
  const Mobius m = target_change.inverse();
  auto transport = [&](const Poly& g, const Poly& h) {
    auto [a, b] = precompose_pair(g, h, degree, s);
    return postcompose_pair(a, b, m);
  };
  auto [G0, H0] = transport(g0, h0);
  auto [G1, H1] = transport(g1, h1);
  const FieldSpec f = G0.field();
  const Poly og = origin.g().embed(f);
  const Poly oh = origin.h().embed(f);
  const Code mu = og.is_zero() ? f.div(oh.lead(), H0.lead()) : f.div(og.lead(), G0.lead());
  G0 = G0.scale(mu);
  H0 = H0.scale(mu);
  G1 = G1.scale(mu);
  H1 = H1.scale(mu);
  if (G0 != og || H0 != oh) throw ComputationError("family transport does not return to its origin");
  return {describe_pencil(G0, G1, H0, H1), f, degree, std::move(G0), std::move(G1), std::move(H0), std::move(H1),
          origin.embed(f), Mobius::identity(f), Mobius::identity(f)};
}

std::string describe_pencil(const Poly& g0, const Poly& g1, const Poly& h0, const Poly& h1) {
  const std::string num = pencil_side(g0, g1);
  if (h0.is_one() && h1.is_zero()) return num;
  return "(" + num + ") / (" + pencil_side(h0, h1) + ")";
}

Family wild_family(const Cover& c, int max_ext) {
  const std::uint32_t p = c.field().characteristic();
  const LengthsResult lr = differential_lengths_partial(c, max_ext);
  std::optional<Point> wild;
  if (lr.divisor.multiplicity(Point::infinity()) >= static_cast<int>(p)) {
    wild = Point::infinity();
  } else {
    for (const auto& [pt, l] : lr.divisor.entries()) {
      if (!pt.is_infinity() && l >= static_cast<int>(p)) {
        wild = pt;
        break;
      }
    }
  }
  if (!wild) {
    if (!lr.split()) {
      for (const auto& sf : squarefree_decomposition(lr.residual)) {
        if (sf.multiplicity >= static_cast<int>(p)) {
          throw SplittingError("point with length >= p lies outside the extension bound " + std::to_string(max_ext));
        }
      }
    }
    throw ValidationError("no point of " + c.to_string() + " has differential length >= " + std::to_string(p));
  }

  const FieldSpec f = wild->is_infinity() ? c.field() : common_or_throw(c.field(), wild->value().field());
  const Cover base = c.embed(f);
  const int d = base.degree();
  const Mobius source = wild->is_infinity() ? Mobius::identity(f) : Mobius::moving_infinity_to(wild->value().embed(f));
  const Cover moved = precompose(base, source);
  Mobius target = Mobius::identity(f);
  if (moved.h().degree() == d) {
    const Code value = moved.g().degree() == d ? f.div(moved.g().lead(), moved.h().lead()) : 0;
    target = Mobius(f, 0, 1, 1, f.neg(value));
  }
  const Cover w = postcompose(moved, target);
  if (d - w.h().degree() < static_cast<int>(p)) {
    throw ComputationError("ramification index at the wild point is below p");
  }
  Poly g1 = w.h().shift(p);
  Poly h1(f);
  return {describe_pencil(w.g(), g1, w.h(), h1), f, d, w.g(), std::move(g1), w.h(), std::move(h1), base, source,
          target};
}

Family osserman_family(std::uint32_t p) {
  const FieldSpec f = require_prime_field(p);
  if (p == 2) throw ValidationError("the x^{p+2} + t x^p + x family needs p > 2");
  const Cover base = Cover::make(Poly::monomial(f, 1, p + 2) + Poly::x(f), Poly::constant(f, 1));
  const Poly g1 = Poly::monomial(f, 1, p);
  return pencil_family(describe_pencil(base.g(), g1, base.h(), Poly(f)), base, g1, Poly(f));
}

Family power_family(std::uint32_t p) {
  const FieldSpec f = require_prime_field(p);
  const Cover base = Cover::make(Poly::monomial(f, 1, p + 1), Poly::constant(f, 1));
  const Poly g1 = Poly::monomial(f, 1, p);
  return pencil_family(describe_pencil(base.g(), g1, base.h(), Poly(f)), base, g1, Poly(f));
}

Family constant_family(const Cover& c) {
  const FieldSpec f = c.field();
  return pencil_family(describe_pencil(c.g(), Poly(f), c.h(), Poly(f)), c, Poly(f), Poly(f));
}

std::vector<FieldElement> sample_parameters(FieldSpec field, std::size_t count, std::uint64_t seed) {
  std::vector<FieldElement> all = field.elements();
  if (count == 0 || count >= all.size()) return all;
  std::mt19937_64 rng(seed);
  std::vector<FieldElement> picked;
  std::sample(all.begin(), all.end(), std::back_inserter(picked), count, rng);
  return picked;
}

FamilyReport verify_family(const Family& f, const std::vector<FieldElement>& ts, int max_ext, int threads) {
  FamilyReport rep;
  const auto bad = f.degenerate_parameter();
  std::vector<FieldElement> kept;
  for (const auto& t : ts) {
    if (bad && Point(t) == Point(*bad)) {
      rep.skipped.push_back(t);
    } else {
      kept.push_back(t);
    }
  }
  if (kept.empty()) return rep;
  std::vector<std::optional<FamilyFiber>> slots(kept.size());
  auto work = [&](std::size_t i) {
    Cover c = f.specialize(kept[i]);
    Poly disc = discriminant(c);
    LengthsResult lr = differential_lengths_partial(c, max_ext);
    const bool split = lr.split();
    slots[i] = FamilyFiber{kept[i], std::move(c), std::move(disc), std::move(lr.divisor), std::move(lr.residual),
                           split, {}};
  };
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, kept.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < kept.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < kept.size(); i += workers) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& s : slots) rep.fibers.push_back(std::move(*s));

  for (const auto& fib : rep.fibers) {
    for (const auto& [pt, l] : fib.lengths.entries()) {
      if (std::find(rep.support.begin(), rep.support.end(), pt) == rep.support.end()) rep.support.push_back(pt);
    }
  }
  const FamilyFiber& first = rep.fibers.front();
  for (auto& fib : rep.fibers) {
    for (const auto& pt : rep.support) fib.ram.push_back(ram_index(fib.cover, pt));
    rep.degree_constant = rep.degree_constant && fib.cover.degree() == first.cover.degree();
    rep.disc_constant = rep.disc_constant && same_poly(fib.disc, first.disc);
    rep.length_divisor_constant =
        rep.length_divisor_constant && fib.lengths == first.lengths && same_poly(fib.residual, first.residual);
  }
  for (std::size_t i = 0; i < rep.fibers.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.fibers.size(); ++j) {
      if (equivalent(rep.fibers[i].cover, rep.fibers[j].cover)) rep.equivalent_pairs.emplace_back(i, j);
    }
  }
  rep.pairwise_inequivalent = rep.equivalent_pairs.empty();
  return rep;
}

FamilyDirection family_direction(const Family& f, int max_ext) {
  const Family o = f.in_original_coordinates();
  NormalizedCover base = normalize(o.origin, max_ext);
  auto [a, b] = precompose_pair(o.g1, o.h1, o.degree, base.source_change);
  auto [dg, dh] = postcompose_pair(a, b, base.target_change);
  DeformationVector v = chart_tangent(base, dg, dh);
  return {std::move(base), std::move(v)};
}

}  // namespace ramify
