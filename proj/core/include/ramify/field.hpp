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

#ifndef RAMIFY_FIELD_HPP_
#define RAMIFY_FIELD_HPP_

// Exact arithmetic in F_p and F_{p^m}.
//
// An element of F_{p^m} = F_p[u]/(modulus) is stored as a Code: the
// base-p integer c_0 + c_1 p + ... + c_{m-1} p^{m-1} of its coefficient
// vector in the power basis {1, u, ..., u^{m-1}}. Code order is therefore the
// lexicographic element order with the constant term varying fastest.
//
// Fields are interned: make_field(p, m) always returns a handle to the same
// immutable object, so handle equality is field equality. Interned fields
// live for the lifetime of the process.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramify {

using Code = std::uint64_t;

inline constexpr std::uint32_t kDefaultMaxPrime = 13;
inline constexpr std::uint32_t kMaxExtensionDegree = 12;

namespace detail {
struct FieldData;
}

class FieldElement;

class FieldSpec {
 public:
  // Throws ValidationError if p is not a prime in [2, max_prime] or m is
  // outside [1, kMaxExtensionDegree].
  static FieldSpec make(std::uint32_t p, std::uint32_t m = 1,
                        std::uint32_t max_prime = kDefaultMaxPrime);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  Code size() const;
  bool is_prime_field() const { return degree() == 1; }

  // Monic irreducible modulus, low-degree coefficient first, including the
  // leading 1. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws ValidationError on zero
  Code div(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const;
  Code frobenius(Code a) const;  // a^p
  Code from_int(std::int64_t n) const;
  bool in_prime_subfield(Code a) const { return a < characteristic(); }
  bool is_valid(Code a) const { return a < size(); }

  // The class of u in F_p[u]/(modulus). Throws for prime fields.
  Code generator() const;

  // Ring embedding into a field whose degree is a multiple of this one. The
  // generator is sent to the least root (in code order) of the modulus.
  Code embed(Code a, FieldSpec target) const;
  bool embeds_into(FieldSpec target) const;

  // "2" for prime-subfield values, "[2*u+1]" otherwise.
  std::string format(Code a) const;
  Code parse(std::string_view text) const;

  FieldElement element(Code a) const;
  FieldElement zero() const;
  FieldElement one() const;
  std::vector<FieldElement> elements() const;

  // "F_3" or "F_3^2".
  std::string name() const;

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.data_ == b.data_; }

 private:
  explicit FieldSpec(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;
};

inline FieldSpec make_field(std::uint32_t p, std::uint32_t m = 1) {
  return FieldSpec::make(p, m);
}

class FieldElement {
 public:
  FieldElement(FieldSpec field, Code code);

  FieldSpec field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;
  FieldElement embed(FieldSpec target) const;

  std::string to_string() const { return field_.format(code_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  void check_same(const FieldElement& o) const;
  FieldSpec field_;
  Code code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

bool is_prime(std::uint64_t n);

// Smallest field containing both, or nullopt when the compositum is too large.
std::optional<FieldSpec> common_field(FieldSpec a, FieldSpec b);

}  // namespace ramify

#endif  // RAMIFY_FIELD_HPP_
