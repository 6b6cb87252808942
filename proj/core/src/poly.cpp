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

#include "ramify/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ramify/error.hpp"

namespace ramify {

Poly::Poly(FieldSpec field, std::vector<Code> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (Code c : c_) {
    if (!field_.is_valid(c)) throw ValidationError("coefficient out of range for " + field_.name());
  }
  trim();
}

Poly Poly::constant(FieldSpec field, Code c) { return Poly(field, {c}); }

Poly Poly::monomial(FieldSpec field, Code c, std::size_t degree) {
  std::vector<Code> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!(field_ == o.field_)) {
    throw ValidationError("field mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(i), o.coeff(i));
  Poly out(field_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(i), o.coeff(i));
  Poly out(field_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

Poly Poly::operator-() const {
  Poly out(field_);
  out.c_.reserve(c_.size());
  for (Code c : c_) out.c_.push_back(field_.neg(c));
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  Poly out(field_);
  if (c_.empty() || o.c_.empty()) return out;
  out.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out.c_[i + j] = field_.add(out.c_[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  out.trim();
  return out;
}

Poly Poly::scale(Code c) const {
  Poly out(field_);
  if (c == 0) return out;
  out.c_.reserve(c_.size());
  for (Code a : c_) out.c_.push_back(field_.mul(a, c));
  return out;
}

Poly Poly::shift(std::size_t k) const {
  if (c_.empty()) return *this;
  Poly out(field_);
  out.c_.assign(k, 0);
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(field_, 1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

Code Poly::eval(Code point) const {
  Code v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = field_.add(field_.mul(v, point), c_[i]);
  return v;
}

Poly Poly::compose(const Poly& inner) const {
  check_same(inner);
  Poly r(field_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + constant(field_, c_[i]);
  return r;
}

Poly Poly::embed(FieldSpec target) const {
  if (target == field_) return *this;
  std::vector<Code> v;
  v.reserve(c_.size());
  for (Code c : c_) v.push_back(field_.embed(c, target));
  return Poly(target, std::move(v));
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Code c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += field_.format(c);
      continue;
    }
    if (c != 1) out += field_.format(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << a.to_string(); }

namespace {

// Splits at top-level '+'/'-' (outside brackets), keeping the sign with each term.
std::vector<std::pair<bool, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<bool, std::string>> terms;
  int depth = 0;
  bool negative = false;
  std::string cur;
  bool expect_term = true;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw ValidationError("unbalanced brackets in \"" + s + "\"");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!expect_term || !cur.empty()) {
        if (cur.empty()) throw ValidationError("empty term in \"" + s + "\"");
        terms.emplace_back(negative, cur);
        cur.clear();
      } else if (!terms.empty()) {
        throw ValidationError("doubled sign in \"" + s + "\"");
      }
      negative = ch == '-';
      expect_term = true;
      continue;
    }
    cur.push_back(ch);
    expect_term = false;
  }
  if (depth != 0) throw ValidationError("unbalanced brackets in \"" + s + "\"");
  if (cur.empty()) throw ValidationError("empty term in \"" + s + "\"");
  terms.emplace_back(negative, cur);
  return terms;
}

}  // namespace

Poly Poly::parse(FieldSpec field, std::string_view text, char var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ValidationError("empty polynomial");
  Poly acc(field);
  for (auto& [negative, term] : split_terms(s)) {
    // locate the indeterminate outside brackets
    std::size_t vpos = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '[') ++depth;
      if (term[i] == ']') --depth;
      if (depth == 0 && term[i] == var) {
        vpos = i;
        break;
      }
    }
    Code c = 1;
    std::size_t k = 0;
    if (vpos == std::string::npos) {
      c = field.parse(term);
    } else {
      std::string head = term.substr(0, vpos);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) c = field.parse(head);
      const std::string tail = term.substr(vpos + 1);
      k = 1;
      if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2 || tail.size() > 6) {
          throw ValidationError("bad exponent in \"" + term + "\"");
        }
        k = 0;
        for (std::size_t i = 1; i < tail.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(tail[i]))) {
            throw ValidationError("bad exponent in \"" + term + "\"");
          }
          k = k * 10 + static_cast<std::size_t>(tail[i] - '0');
        }
      }
    }
    if (negative) c = field.neg(c);
    acc += monomial(field, c, k);
  }
  return acc;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  if (!(a.field() == b.field())) throw ValidationError("field mismatch in divrem");
  const FieldSpec f = a.field();
  std::vector<Code> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {Poly(f), a};
  std::vector<Code> q(r.size() - db, 0);
  const Code inv_lead = f.inv(bc.back());
  for (std::size_t i = r.size(); i-- > db;) {
    const Code c = f.mul(r[i], inv_lead);
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly monic(const Poly& a) {
  if (a.is_zero()) throw ValidationError("monic of the zero polynomial");
  return a.scale(a.field().inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : monic(x);
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw ValidationError("inexact polynomial division");
  return q;
}

Poly derivative(const Poly& a) {
  const FieldSpec f = a.field();
  const auto& c = a.coeffs();
  if (c.size() <= 1) return Poly(f);
  std::vector<Code> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    d[i - 1] = f.mul(c[i], f.from_int(static_cast<std::int64_t>(i % f.characteristic())));
  }
  return Poly(f, std::move(d));
}

Poly pth_root(const Poly& a) {
  const FieldSpec f = a.field();
  const std::uint32_t p = f.characteristic();
  const auto& c = a.coeffs();
  std::uint64_t inverse_frobenius = 1;  // p^{m-1}
  for (std::uint32_t i = 1; i < f.degree(); ++i) inverse_frobenius *= p;
  std::vector<Code> r(c.empty() ? 0 : (c.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (i % p != 0) throw ValidationError("pth_root of a polynomial that is not a p-th power");
    r[i / p] = f.pow(c[i], inverse_frobenius);
  }
  return Poly(f, std::move(r));
}

namespace {

void squarefree_into(const Poly& f, int scale, std::vector<SquarefreeFactor>& out) {
  if (f.degree() <= 0) return;
  const int p = static_cast<int>(f.field().characteristic());
  const Poly fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_into(pth_root(f), scale * p, out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    const Poly y = gcd(w, c);
    const Poly z = exact_div(w, y);
    if (z.degree() > 0) out.push_back({monic(z), i * scale});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) squarefree_into(pth_root(c), scale * p, out);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly r = Poly::constant(mod.field(), 1);
  base = divrem(base, mod).remainder;
  while (e > 0) {
    if (e & 1) r = divrem(r * base, mod).remainder;
    e >>= 1;
    if (e > 0) base = divrem(base * base, mod).remainder;
  }
  return r;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& a) {
  std::vector<SquarefreeFactor> raw;
  squarefree_into(monic(a), 1, raw);
  std::vector<SquarefreeFactor> merged;
  for (auto& sf : raw) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const SquarefreeFactor& m) { return m.multiplicity == sf.multiplicity; });
    if (it == merged.end()) {
      merged.push_back(sf);
    } else {
      it->factor = it->factor * sf.factor;
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return x.multiplicity < y.multiplicity; });
  return merged;
}

std::vector<DistinctDegreeFactor> distinct_degree_factorization(const Poly& a) {
  const FieldSpec f = a.field();
  std::vector<DistinctDegreeFactor> out;
  Poly rest = monic(a);
  const Poly x = Poly::x(f);
  Poly h = divrem(x, rest).remainder;
  int i = 1;
  while (rest.degree() >= 2 * i) {
    h = powmod(h, f.size(), rest);
    const Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.push_back({g, i});
      rest = exact_div(rest, g);
      h = divrem(h, rest).remainder;
    }
    ++i;
  }
  if (rest.degree() > 0) out.push_back({rest, rest.degree()});
  return out;
}

}  // namespace ramify
