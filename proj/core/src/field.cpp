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

#include "ramify/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <utility>

#include "ramify/error.hpp"

namespace ramify {

namespace detail {

namespace {

constexpr Code kFullTableLimit = 256;
constexpr Code kLogTableLimit = Code{1} << 20;

using Digits = std::array<std::uint32_t, kMaxExtensionDegree>;

// Minimal F_p[x] helpers used only to find the modulus. Coefficients are low
// degree first and kept trimmed.
using SmallPoly = std::vector<std::uint32_t>;

void trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

SmallPoly small_mod(SmallPoly a, const SmallPoly& f, std::uint32_t p) {
  // f monic
  const std::size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + p - (c * f[j]) % p) % p;
    }
    trim(a);
  }
  return a;
}

SmallPoly small_mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& f,
                       std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  SmallPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return small_mod(std::move(r), f, p);
}

SmallPoly small_powmod(SmallPoly base, std::uint64_t e, const SmallPoly& f, std::uint32_t p) {
  SmallPoly r{1};
  base = small_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = small_mulmod(r, base, f, p);
    base = small_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t small_inv(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::uint32_t e = p - 2, b = a; e > 0; e >>= 1, b = (b * b) % p) {
    if (e & 1) r = (r * b) % p;
  }
  return r;
}

SmallPoly small_gcd(SmallPoly a, SmallPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then reduce a mod b
    const std::uint32_t li = small_inv(b.back(), p);
    for (auto& c : b) c = (c * li) % p;
    a = small_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test: f of degree m is irreducible over F_p iff x^{p^m} = x mod f and
// gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
bool small_irreducible(const SmallPoly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  auto x_pow_p_iter = [&](std::uint32_t k) {
    SmallPoly r{0, 1};
    for (std::uint32_t i = 0; i < k; ++i) r = small_powmod(r, p, f, p);
    return r;
  };
  auto minus_x = [&](SmallPoly r) {
    if (r.size() < 2) r.resize(2, 0);
    r[1] = (r[1] + p - 1) % p;
    trim(r);
    return r;
  };
  if (!minus_x(x_pow_p_iter(m)).empty()) return false;
  for (std::uint64_t r : prime_factors(m)) {
    const SmallPoly g = small_gcd(f, minus_x(x_pow_p_iter(m / static_cast<std::uint32_t>(r))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  Code q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<Code> pw;  // p^i

  std::vector<std::uint32_t> add_tab;  // q*q, when q <= kFullTableLimit
  std::vector<std::uint32_t> mul_tab;
  std::vector<Code> exp_tab;  // 2(q-1) entries
  std::vector<Code> log_tab;
  std::vector<Code> inv_tab;

  mutable std::mutex embed_mutex;
  mutable std::map<const FieldData*, Code> generator_images;

  Digits digits(Code a) const {
    Digits d{};
    for (std::uint32_t i = 0; i < m; ++i) {
      d[i] = static_cast<std::uint32_t>(a % p);
      a /= p;
    }
    return d;
  }

  Code encode(const Digits& d) const {
    Code a = 0;
    for (std::uint32_t i = m; i-- > 0;) a = a * p + d[i];
    return a;
  }

  Code add_generic(Code a, Code b) const {
    if (m == 1) return (a + b) % p;
    Digits da = digits(a);
    const Digits db = digits(b);
    for (std::uint32_t i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }

  Code neg_generic(Code a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    Digits da = digits(a);
    for (std::uint32_t i = 0; i < m; ++i) da[i] = (p - da[i]) % p;
    return encode(da);
  }

  Code mul_generic(Code a, Code b) const {
    if (m == 1) return (a * b) % p;
    const Digits da = digits(a);
    const Digits db = digits(b);
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (std::uint32_t i = 0; i < m; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
    }
    for (auto& c : prod) c %= p;
    for (std::uint32_t k = 2 * m - 1; k-- > m;) {
      const std::uint64_t c = prod[k] % p;
      if (c == 0) continue;
      prod[k] = 0;
      for (std::uint32_t j = 0; j < m; ++j) {
        prod[k - m + j] = (prod[k - m + j] + c * (p - modulus[j])) % p;
      }
    }
    Digits out{};
    for (std::uint32_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
    return encode(out);
  }

  Code pow_generic(Code a, std::uint64_t e) const {
    Code r = 1;
    while (e > 0) {
      if (e & 1) r = mul_generic(r, a);
      a = mul_generic(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    if (q <= kFullTableLimit) {
      add_tab.resize(q * q);
      mul_tab.resize(q * q);
      for (Code a = 0; a < q; ++a) {
        for (Code b = 0; b < q; ++b) {
          add_tab[a * q + b] = static_cast<std::uint32_t>(add_generic(a, b));
          mul_tab[a * q + b] = static_cast<std::uint32_t>(mul_generic(a, b));
        }
      }
    }
    if (q <= kLogTableLimit) {
      const Code order = q - 1;
      const auto factors = prime_factors(order);
      Code gen = 0;
      for (Code g = 1; g < q; ++g) {
        bool primitive = true;
        for (auto r : factors) {
          if (pow_generic(g, order / r) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          gen = g;
          break;
        }
      }
      exp_tab.resize(2 * order);
      log_tab.assign(q, 0);
      Code x = 1;
      for (Code i = 0; i < order; ++i) {
        exp_tab[i] = x;
        exp_tab[i + order] = x;
        log_tab[x] = i;
        x = mul_generic(x, gen);
      }
      inv_tab.assign(q, 0);
      for (Code a = 1; a < q; ++a) inv_tab[a] = exp_tab[(order - log_tab[a]) % order];
    }
  }
};

namespace {

std::unique_ptr<FieldData> build_field(std::uint32_t p, std::uint32_t m) {
  auto f = std::make_unique<FieldData>();
  f->p = p;
  f->m = m;
  f->pw.assign(m + 1, 1);
  for (std::uint32_t i = 1; i <= m; ++i) f->pw[i] = f->pw[i - 1] * p;
  f->q = f->pw[m];
  if (m > 1) {
    // Candidates in lexicographic order of (c_0, c_1, ..., c_{m-1}) with c_0
    // the most significant; c_0 = 0 is always reducible.
    const Code count = f->pw[m];
    for (Code n = f->pw[m - 1]; n < count; ++n) {
      SmallPoly cand(m + 1, 0);
      Code rest = n;
      for (std::uint32_t i = m; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      // cand[0] is now the most significant digit of n
      cand[m] = 1;
      if (small_irreducible(cand, p)) {
        f->modulus = cand;
        break;
      }
    }
  }
  f->build_tables();
  return f;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldData>> r;
  return r;
}

}  // namespace
}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t m, std::uint32_t max_prime) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  if (p > max_prime) {
    throw ValidationError("characteristic " + std::to_string(p) + " exceeds the limit " +
                          std::to_string(max_prime));
  }
  if (m < 1 || m > kMaxExtensionDegree) {
    throw ValidationError("extension degree " + std::to_string(m) + " outside [1, " +
                          std::to_string(kMaxExtensionDegree) + "]");
  }
  std::lock_guard lock(detail::registry_mutex());
  auto& slot = detail::registry()[{p, m}];
  if (!slot) slot = detail::build_field(p, m);
  return FieldSpec(slot.get());
}

std::uint32_t FieldSpec::characteristic() const { return data_->p; }
std::uint32_t FieldSpec::degree() const { return data_->m; }
Code FieldSpec::size() const { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const { return data_->modulus; }

Code FieldSpec::add(Code a, Code b) const {
  const auto& d = *data_;
  if (d.m == 1) {
    const Code s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  if (!d.add_tab.empty()) return d.add_tab[a * d.q + b];
  return d.add_generic(a, b);
}

Code FieldSpec::neg(Code a) const {
  const auto& d = *data_;
  if (d.m == 1) return a == 0 ? 0 : d.p - a;
  if (d.p == 2) return a;
  return d.neg_generic(a);
}

Code FieldSpec::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldSpec::mul(Code a, Code b) const {
  const auto& d = *data_;
  if (d.m == 1) return (a * b) % d.p;
  if (!d.mul_tab.empty()) return d.mul_tab[a * d.q + b];
  if (a == 0 || b == 0) return 0;
  if (!d.exp_tab.empty()) return d.exp_tab[d.log_tab[a] + d.log_tab[b]];
  return d.mul_generic(a, b);
}

Code FieldSpec::inv(Code a) const {
  if (a == 0) throw ValidationError("division by zero in " + name());
  const auto& d = *data_;
  if (!d.inv_tab.empty()) return d.inv_tab[a];
  return d.pow_generic(a, d.q - 2);
}

Code FieldSpec::div(Code a, Code b) const { return mul(a, inv(b)); }

Code FieldSpec::pow(Code a, std::uint64_t e) const {
  Code r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Code FieldSpec::frobenius(Code a) const { return pow(a, data_->p); }

Code FieldSpec::from_int(std::int64_t n) const {
  const std::int64_t p = data_->p;
  return static_cast<Code>(((n % p) + p) % p);
}

Code FieldSpec::generator() const {
  if (is_prime_field()) throw ValidationError(name() + " has no generator u");
  return data_->p;  // digits (0, 1, 0, ...)
}

bool FieldSpec::embeds_into(FieldSpec target) const {
  return target.characteristic() == characteristic() && target.degree() % degree() == 0;
}

namespace {

Code embed_with_root(FieldSpec src, Code a, FieldSpec dst, Code root) {
  Code v = 0;
  Code digits = a;
  std::vector<std::uint32_t> ds(src.degree());
  for (auto& d : ds) {
    d = static_cast<std::uint32_t>(digits % src.characteristic());
    digits /= src.characteristic();
  }
  for (std::size_t i = ds.size(); i-- > 0;) v = dst.add(dst.mul(v, root), ds[i]);
  return v;
}

std::uint32_t least_prime_factor(std::uint32_t n) {
  for (std::uint32_t l = 2; l * l <= n; ++l) {
    if (n % l == 0) return l;
  }
  return n;
}

// Maximal subfields take the least root agreeing with maximal subfields of
// smaller prime index on their intersection; others factor through one.
Code generator_image(FieldSpec src, FieldSpec dst) {
  const std::uint32_t p = src.characteristic();
  const std::uint32_t ms = src.degree();
  const std::uint32_t mt = dst.degree();
  const Code u = p;
  const std::uint32_t l = least_prime_factor(mt / ms);
  if (l != mt / ms) {
    const FieldSpec mid = FieldSpec::make(p, mt / l, p);
    return mid.embed(src.embed(u, mid), dst);
  }
  struct Constraint {
    Code in_src;
    Code in_dst;
  };
  std::vector<Constraint> constraints;
  for (std::uint32_t lp = 2; lp < l; ++lp) {
    if (mt % lp != 0 || least_prime_factor(lp) != lp) continue;
    const std::uint32_t g = std::gcd(ms, mt / lp);
    if (g == 1) continue;
    const FieldSpec other = FieldSpec::make(p, mt / lp, p);
    const FieldSpec common = FieldSpec::make(p, g, p);
    constraints.push_back({common.embed(u, src), other.embed(common.embed(u, other), dst)});
  }
  const auto& mod = src.modulus();
  for (Code z = 0; z < dst.size(); ++z) {
    Code v = 0;
    for (std::size_t i = mod.size(); i-- > 0;) v = dst.add(dst.mul(v, z), mod[i]);
    if (v != 0) continue;
    bool ok = true;
    for (const auto& c : constraints) {
      if (embed_with_root(src, c.in_src, dst, z) != c.in_dst) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
  throw ComputationError("no compatible embedding of " + src.name() + " into " + dst.name());
}

}  // namespace

Code FieldSpec::embed(Code a, FieldSpec target) const {
  if (target == *this) return a;
  if (!embeds_into(target)) {
    throw ValidationError("cannot embed " + name() + " into " + target.name());
  }
  if (is_prime_field()) return a;
  std::optional<Code> root;
  {
    std::lock_guard lock(data_->embed_mutex);
    auto it = data_->generator_images.find(target.data_);
    if (it != data_->generator_images.end()) root = it->second;
  }
  if (!root) {
    root = generator_image(*this, target);
    std::lock_guard lock(data_->embed_mutex);
    data_->generator_images.emplace(target.data_, *root);
  }
  const auto digits = data_->digits(a);
  Code v = 0;
  for (std::uint32_t i = data_->m; i-- > 0;) v = target.add(target.mul(v, *root), digits[i]);
  return v;
}

std::string FieldSpec::format(Code a) const {
  if (a < data_->p) return std::to_string(a);
  const auto digits = data_->digits(a);
  std::string out = "[";
  bool first = true;
  for (std::uint32_t i = data_->m; i-- > 0;) {
    const std::uint32_t c = digits[i];
    if (c == 0) continue;
    if (!first) out += "+";
    first = false;
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "u";
    if (i > 1) out += "^" + std::to_string(i);
  }
  out += "]";
  return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 12) throw ValidationError("bad integer in \"" + std::string(whole) + "\"");
  std::int64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ValidationError("bad integer in \"" + std::string(whole) + "\"");
    }
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

Code FieldSpec::parse(std::string_view text) const {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ValidationError("empty field element");
  if (s.front() != '[') {
    std::string_view body = s;
    bool negative = false;
    if (body.front() == '-' || body.front() == '+') {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    const std::int64_t v = parse_int(body, s);
    return from_int(negative ? -v : v);
  }
  if (s.back() != ']') throw ValidationError("unterminated element \"" + s + "\"");
  const std::string_view inner = std::string_view(s).substr(1, s.size() - 2);
  if (inner.empty()) throw ValidationError("empty element \"" + s + "\"");
  Code acc = 0;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    bool negative = false;
    if (inner[pos] == '+' || inner[pos] == '-') {
      negative = inner[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ValidationError("bad element \"" + s + "\"");
    }
    std::size_t end = pos;
    while (end < inner.size() && inner[end] != '+' && inner[end] != '-') ++end;
    const std::string_view term = inner.substr(pos, end - pos);
    if (term.empty()) throw ValidationError("bad element \"" + s + "\"");
    pos = end;
    std::int64_t coeff = 1;
    std::uint64_t exponent = 0;
    const std::size_t upos = term.find('u');
    if (upos == std::string_view::npos) {
      coeff = parse_int(term, s);
    } else {
      std::string_view head = term.substr(0, upos);
      if (!head.empty()) {
        if (head.back() != '*') throw ValidationError("bad element \"" + s + "\"");
        head.remove_suffix(1);
        coeff = parse_int(head, s);
      }
      std::string_view tail = term.substr(upos + 1);
      exponent = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw ValidationError("bad element \"" + s + "\"");
        exponent = static_cast<std::uint64_t>(parse_int(tail.substr(1), s));
      }
      if (is_prime_field()) throw ValidationError("element \"" + s + "\" uses u in prime field " + name());
    }
    Code term_value = from_int(negative ? -coeff : coeff);
    if (exponent > 0) term_value = mul(term_value, pow(generator(), exponent));
    acc = add(acc, term_value);
  }
  return acc;
}

FieldElement FieldSpec::element(Code a) const { return FieldElement(*this, a); }
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size());
  for (Code a = 0; a < size(); ++a) out.emplace_back(*this, a);
  return out;
}

std::string FieldSpec::name() const {
  std::string s = "F_" + std::to_string(data_->p);
  if (data_->m > 1) s += "^" + std::to_string(data_->m);
  return s;
}

FieldElement::FieldElement(FieldSpec field, Code code) : field_(field), code_(code) {
  if (!field.is_valid(code)) throw ValidationError("code out of range for " + field.name());
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw ValidationError("field mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(code_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_.frobenius(code_)}; }
FieldElement FieldElement::embed(FieldSpec target) const {
  return {target, field_.embed(code_, target)};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

std::optional<FieldSpec> common_field(FieldSpec a, FieldSpec b) {
  if (a == b) return a;
  if (a.characteristic() != b.characteristic()) return std::nullopt;
  if (a.embeds_into(b)) return b;
  if (b.embeds_into(a)) return a;
  const std::uint32_t m = std::lcm(a.degree(), b.degree());
  if (m > kMaxExtensionDegree) return std::nullopt;
  return FieldSpec::make(a.characteristic(), m, std::max(a.characteristic(), kDefaultMaxPrime));
}

}  // namespace ramify
