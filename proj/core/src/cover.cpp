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

#include "ramify/cover.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "ramify/error.hpp"

namespace ramify {

namespace {

FieldSpec require_common(FieldSpec a, FieldSpec b) {
  auto f = common_field(a, b);
  if (!f) throw ValidationError("no common field for " + a.name() + " and " + b.name());
  return *f;
}

FieldSpec make_ext(FieldSpec base, int r) {
  return FieldSpec::make(base.characteristic(), base.degree() * static_cast<std::uint32_t>(r),
                         std::max(base.characteristic(), kDefaultMaxPrime));
}

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  if (out.size() >= 2 && out.front() == '(' && out.back() == ')') out = out.substr(1, out.size() - 2);
  return out;
}

int order_at(Poly a, Code z) {
  // a != 0
  int k = 0;
  const FieldSpec f = a.field();
  const Poly lin = Poly(f, {f.neg(z), 1});
  while (true) {
    auto [q, r] = divrem(a, lin);
    if (!r.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

}  // namespace

// ---------------------------------------------------------------- Point

Point Point::embed(FieldSpec target) const {
  if (is_infinity()) return *this;
  return Point(x_->embed(target));
}

std::string Point::to_string() const { return is_infinity() ? "inf" : x_->to_string(); }

bool operator==(const Point& a, const Point& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  const auto f = common_field(a.value().field(), b.value().field());
  if (!f) return false;
  return a.value().embed(*f) == b.value().embed(*f);
}

// ---------------------------------------------------------------- Mobius

Mobius::Mobius(FieldSpec field, Code a, Code b, Code c, Code d)
    : field_(field), a_(a), b_(b), c_(c), d_(d) {
  for (Code x : {a, b, c, d}) {
    if (!field.is_valid(x)) throw ValidationError("Mobius coefficient out of range");
  }
  if (field.sub(field.mul(a, d), field.mul(b, c)) == 0) {
    throw ValidationError("singular Mobius transformation");
  }
}

Mobius Mobius::moving_infinity_to(FieldElement w) {
  return Mobius(w.field(), w.code(), 1, 1, 0);
}

Mobius Mobius::inverse() const {
  const FieldSpec f = field_;
  return Mobius(f, d_, f.neg(b_), f.neg(c_), a_);
}

Mobius Mobius::compose(const Mobius& inner) const {
  const FieldSpec f = require_common(field_, inner.field_);
  const Mobius x = embed(f);
  const Mobius y = inner.embed(f);
  auto dot = [&](Code p, Code q, Code r, Code s) { return f.add(f.mul(p, q), f.mul(r, s)); };
  return Mobius(f, dot(x.a_, y.a_, x.b_, y.c_), dot(x.a_, y.b_, x.b_, y.d_),
                dot(x.c_, y.a_, x.d_, y.c_), dot(x.c_, y.b_, x.d_, y.d_));
}

Mobius Mobius::embed(FieldSpec target) const {
  if (target == field_) return *this;
  return Mobius(target, field_.embed(a_, target), field_.embed(b_, target), field_.embed(c_, target),
                field_.embed(d_, target));
}

Point Mobius::apply(const Point& p) const {
  if (p.is_infinity()) {
    if (c_ == 0) return Point::infinity();
    return Point(FieldElement(field_, field_.div(a_, c_)));
  }
  const FieldSpec f = require_common(field_, p.value().field());
  const Mobius m = embed(f);
  const Code z = p.value().embed(f).code();
  const Code num = f.add(f.mul(m.a_, z), m.b_);
  const Code den = f.add(f.mul(m.c_, z), m.d_);
  if (den == 0) return Point::infinity();
  return Point(FieldElement(f, f.div(num, den)));
}

std::string Mobius::to_string(char var) const {
  const FieldSpec f = field_;
  std::string lhs = std::string(1, var) + " -> ";
  if (c_ == 0) {
    const Code inv = f.inv(d_);
    return lhs + Poly(f, {f.mul(b_, inv), f.mul(a_, inv)}).to_string(var);
  }
  return lhs + "(" + Poly(f, {b_, a_}).to_string(var) + ")/(" + Poly(f, {d_, c_}).to_string(var) + ")";
}

// ---------------------------------------------------------------- Cover

Cover Cover::make(Poly g, Poly h) {
  if (!(g.field() == h.field())) throw ValidationError("numerator and denominator over different fields");
  if (g.is_zero() && h.is_zero()) throw ValidationError("zero numerator and denominator");
  if (gcd(g, h).degree() > 0) throw ValidationError("numerator and denominator share a common factor");
  if ((h * derivative(g) - g * derivative(h)).is_zero()) {
    throw ValidationError("inseparable map: h*g' - g*h' vanishes identically");
  }
  const int d = std::max(g.degree(), h.degree());
  return Cover(std::move(g), std::move(h), d);
}

Cover Cover::parse(FieldSpec field, std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (depth == 0 && text[i] == '/') {
      if (slash != std::string_view::npos) throw ValidationError("more than one '/' in cover");
      slash = i;
    }
  }
  if (slash == std::string_view::npos) {
    return make(Poly::parse(field, strip(text)), Poly::constant(field, 1));
  }
  return make(Poly::parse(field, strip(text.substr(0, slash))),
              Poly::parse(field, strip(text.substr(slash + 1))));
}

std::ostream& operator<<(std::ostream& os, const Cover& c) { return os << c.to_string(); }

Cover Cover::embed(FieldSpec target) const {
  if (target == field()) return *this;
  return Cover(g_.embed(target), h_.embed(target), d_);
}

std::string Cover::to_string() const {
  if (h_.is_one()) return g_.to_string();
  return g_.to_string() + " / " + h_.to_string();
}

FieldMatrix Cover::plane() const {
  FieldMatrix m(field(), 2, static_cast<std::size_t>(d_) + 1);
  for (int j = 0; j <= d_; ++j) {
    m.at(0, static_cast<std::size_t>(j)) = g_.coeff(static_cast<std::size_t>(d_ - j));
    m.at(1, static_cast<std::size_t>(j)) = h_.coeff(static_cast<std::size_t>(d_ - j));
  }
  m.rref();
  return m;
}

Poly raw_discriminant(const Cover& c) {
  return c.h() * derivative(c.g()) - c.g() * derivative(c.h());
}

Poly discriminant(const Cover& c) { return monic(raw_discriminant(c)); }

// ---------------------------------------------------------------- Divisor

void Divisor::add(Point p, int multiplicity) {
  if (multiplicity <= 0) throw ValidationError("divisor multiplicities must be positive");
  for (auto& [q, m] : entries_) {
    if (q == p) {
      m += multiplicity;
      return;
    }
  }
  auto pos = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) {
    if (e.first.is_infinity()) return true;
    if (p.is_infinity()) return false;
    return p.value().code() < e.first.value().code();
  });
  entries_.insert(pos, {std::move(p), multiplicity});
}

int Divisor::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

int Divisor::multiplicity(const Point& p) const {
  for (const auto& e : entries_) {
    if (e.first == p) return e.second;
  }
  return 0;
}

std::vector<int> Divisor::multiset() const {
  std::vector<int> out;
  for (const auto& e : entries_) out.push_back(e.second);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (const auto& [p, m] : a.entries_) {
    if (b.multiplicity(p) != m) return false;
  }
  return true;
}

int length_at_infinity(const Cover& c) {
  return 2 * c.degree() - 2 - raw_discriminant(c).degree();
}

LengthsResult differential_lengths_partial(const Cover& c, int max_ext) {
  const Poly disc = raw_discriminant(c);
  RootsResult roots = roots_with_multiplicity(disc, max_ext);
  LengthsResult out{Divisor(), roots.residual};
  for (auto& r : roots.roots) out.divisor.add(Point(r.value), r.multiplicity);
  const int l_inf = 2 * c.degree() - 2 - disc.degree();
  if (l_inf > 0) out.divisor.add(Point::infinity(), l_inf);
  return out;
}

Divisor differential_lengths(const Cover& c, int max_ext) {
  LengthsResult r = differential_lengths_partial(c, max_ext);
  if (!r.split()) {
    throw SplittingError("discriminant factor " + r.residual.to_string() + " does not split within " +
                         std::to_string(max_ext) + " extensions");
  }
  return std::move(r.divisor);
}

std::vector<int> length_multiset(const Cover& c) {
  const Poly disc = raw_discriminant(c);
  std::vector<int> out;
  for (const auto& sf : squarefree_decomposition(disc)) {
    out.insert(out.end(), static_cast<std::size_t>(sf.factor.degree()), sf.multiplicity);
  }
  const int l_inf = 2 * c.degree() - 2 - disc.degree();
  if (l_inf > 0) out.push_back(l_inf);
  std::sort(out.begin(), out.end());
  return out;
}

RamificationIndex ram_index(const Cover& c, const Point& p) {
  Cover work = c;
  Code z = 0;
  if (p.is_infinity()) {
    work = precompose(c, Mobius(c.field(), 0, 1, 1, 0));
  } else {
    const FieldSpec f = require_common(c.field(), p.value().field());
    work = c.embed(f);
    z = p.value().embed(f).code();
  }
  const FieldSpec f = work.field();
  const Code hz = work.h().eval(z);
  int e = 0;
  if (hz == 0) {
    e = order_at(work.h(), z);
  } else {
    const Code value = f.div(work.g().eval(z), hz);
    e = order_at(work.g() - work.h().scale(value), z);
  }
  return {e, e % static_cast<int>(f.characteristic()) == 0};
}

// ---------------------------------------------------------------- Mobius actions

std::pair<Poly, Poly> precompose_pair(const Poly& g, const Poly& h, int d, const Mobius& m) {
  const FieldSpec f = require_common(g.field(), m.field());
  const Mobius mm = m.embed(f);
  const Poly num(f, {mm.b(), mm.a()});
  const Poly den(f, {mm.d(), mm.c()});
  std::vector<Poly> num_pow{Poly::constant(f, 1)};
  std::vector<Poly> den_pow{Poly::constant(f, 1)};
  for (int i = 1; i <= d; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  auto substitute = [&](const Poly& a) {
    const Poly ae = a.embed(f);
    if (ae.degree() > d) throw ValidationError("polynomial degree exceeds the homogenization degree");
    Poly out(f);
    for (int i = 0; i <= ae.degree(); ++i) {
      const Code ci = ae.coeff(static_cast<std::size_t>(i));
      if (ci == 0) continue;
      out += (num_pow[static_cast<std::size_t>(i)] * den_pow[static_cast<std::size_t>(d - i)]).scale(ci);
    }
    return out;
  };
  return {substitute(g), substitute(h)};
}

std::pair<Poly, Poly> postcompose_pair(const Poly& g, const Poly& h, const Mobius& m) {
  const FieldSpec f = require_common(g.field(), m.field());
  const Mobius mm = m.embed(f);
  const Poly ge = g.embed(f);
  const Poly he = h.embed(f);
  return {ge.scale(mm.a()) + he.scale(mm.b()), ge.scale(mm.c()) + he.scale(mm.d())};
}

Cover postcompose(const Cover& c, const Mobius& m) {
  auto [g, h] = postcompose_pair(c.g(), c.h(), m);
  return Cover::make(std::move(g), std::move(h));
}

Cover precompose(const Cover& c, const Mobius& m) {
  auto [g, h] = precompose_pair(c.g(), c.h(), c.degree(), m);
  return Cover::make(std::move(g), std::move(h));
}

std::optional<Mobius> equivalent(const Cover& a, const Cover& b) {
  if (a.degree() != b.degree()) return std::nullopt;
  const auto f = common_field(a.field(), b.field());
  if (!f) return std::nullopt;
  const Cover x = a.embed(*f);
  const Cover y = b.embed(*f);
  const FieldMatrix px = x.plane();
  const FieldMatrix py = y.plane();
  for (std::size_t j = 0; j < px.cols(); ++j) {
    if (px.at(0, j) != py.at(0, j) || px.at(1, j) != py.at(1, j)) return std::nullopt;
  }
  const std::size_t n = static_cast<std::size_t>(x.degree()) + 1;
  FieldMatrix basis(*f, n, 2);
  Vec tg(n), th(n);
  for (std::size_t i = 0; i < n; ++i) {
    basis.at(i, 0) = x.g().coeff(i);
    basis.at(i, 1) = x.h().coeff(i);
    tg[i] = y.g().coeff(i);
    th[i] = y.h().coeff(i);
  }
  const auto top = solve(basis, tg);
  const auto bottom = solve(basis, th);
  if (!top || !bottom) return std::nullopt;
  return Mobius(*f, (*top)[0], (*top)[1], (*bottom)[0], (*bottom)[1]);
}

// ---------------------------------------------------------------- normalization

bool is_chart_form(const Cover& c) {
  const int d = c.degree();
  if (c.g().degree() != d || c.h().degree() != d - 1) return false;
  if (c.g().lead() != 1 || c.h().lead() != 1) return false;
  if (c.g().coeff(static_cast<std::size_t>(d - 1)) != 0) return false;
  return length_at_infinity(c) == 0;
}

NormalizedCover normalize(const Cover& c, int max_ext) {
  const Poly disc = raw_discriminant(c);
  const int d = c.degree();
  FieldSpec work = c.field();
  std::optional<Point> q;
  if (2 * d - 2 - disc.degree() == 0) {
    q = Point::infinity();
  } else {
    const int limit = std::min(max_ext, static_cast<int>(kMaxExtensionDegree / c.field().degree()));
    for (int r = 1; r <= limit && !q; ++r) {
      const FieldSpec f = make_ext(c.field(), r);
      const Poly df = disc.embed(f);
      for (Code z = 0; z < f.size(); ++z) {
        if (df.eval(z) != 0) {
          q = Point(FieldElement(f, z));
          work = f;
          break;
        }
      }
    }
  }
  if (!q) {
    throw SplittingError("no unramified point of " + c.to_string() + " within " + std::to_string(max_ext) +
                         " extensions");
  }

  const Mobius source = q->is_infinity() ? Mobius::identity(work) : Mobius::moving_infinity_to(q->value());
  const Cover moved = precompose(c.embed(work), source);

  // target: send f(inf) to inf, then make g, h monic and clear the x^{d-1} term of g
  Mobius target = Mobius::identity(work);
  if (moved.h().degree() == d) {
    const Code value = moved.g().degree() == d ? work.div(moved.g().lead(), moved.h().lead()) : 0;
    target = Mobius(work, 0, 1, 1, work.neg(value));
  }
  auto [g1, h1] = postcompose_pair(moved.g(), moved.h(), target);
  if (g1.degree() != d || h1.degree() != d - 1) {
    throw ComputationError("normalization failed to reach the affine chart for " + c.to_string());
  }
  const Mobius scaling(work, work.inv(g1.lead()), 0, 0, work.inv(h1.lead()));
  target = scaling.compose(target);
  const Code shift = work.div(g1.coeff(static_cast<std::size_t>(d - 1)), g1.lead());
  target = Mobius(work, 1, work.neg(shift), 0, 1).compose(target);

  Cover normalized = postcompose(moved, target);
  return {std::move(normalized), source, target};
}

}  // namespace ramify
