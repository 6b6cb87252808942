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

#ifndef RAMIFY_POLY_HPP_
#define RAMIFY_POLY_HPP_

// Dense univariate polynomials over a FieldSpec.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramify/field.hpp"

namespace ramify {

class Poly {
 public:
  explicit Poly(FieldSpec field) : field_(field) {}
  Poly(FieldSpec field, std::vector<Code> coeffs);

  static Poly constant(FieldSpec field, Code c);
  static Poly monomial(FieldSpec field, Code c, std::size_t degree);
  static Poly x(FieldSpec field) { return monomial(field, 1, 1); }
  // Parses the polynomial grammar, e.g. "x^4 + 2" or "[u+1]*x^2 + 2*x + 1".
  // `var` names the indeterminate.
  static Poly parse(FieldSpec field, std::string_view text, char var = 'x');

  FieldSpec field() const { return field_; }
  const std::vector<Code>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Code coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Code lead() const { return c_.empty() ? 0 : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scale(Code c) const;
  Poly shift(std::size_t k) const;  // multiply by x^k
  Poly pow(std::uint64_t e) const;
  Code eval(Code point) const;
  // Substitutes `inner` for the indeterminate.
  Poly compose(const Poly& inner) const;
  // Maps coefficients into an extension field.
  Poly embed(FieldSpec target) const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  // Total order for use as a map key (degree, then coefficients from the top).
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void check_same(const Poly& o) const;
  void trim();

  FieldSpec field_;
  std::vector<Code> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& a);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& a, const Poly& b);  // throws on zero divisor
Poly gcd(const Poly& a, const Poly& b);       // monic; gcd(0, 0) = 0
Poly derivative(const Poly& a);
Poly monic(const Poly& a);  // throws on zero

// Exact division; throws ValidationError if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

// Inverse Frobenius applied to a polynomial in x^p: returns r with r^p = a.
// Requires derivative(a) == 0.
Poly pth_root(const Poly& a);

struct SquarefreeFactor {
  Poly factor;  // monic, squarefree, non-constant
  int multiplicity;
};

// monic(a) = prod factor^multiplicity with pairwise coprime factors, sorted by
// multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& a);

struct DistinctDegreeFactor {
  Poly factor;  // product of all monic irreducible factors of this degree
  int degree;
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<DistinctDegreeFactor> distinct_degree_factorization(const Poly& a);

struct Root {
  FieldElement value;
  int multiplicity;
};

struct RootsResult {
  FieldSpec field;          // the extension in which the roots live
  std::vector<Root> roots;  // sorted by code
  Poly residual;            // monic, over the input field; 1 iff split
  bool split() const { return residual.is_one(); }
};

// Roots with multiplicity in F_{p^{m r}} with r <= max_ext (and m r within the
// field size limit). Factors whose splitting would need a larger extension are
// returned in `residual`. Throws ValidationError on zero input.
RootsResult roots_with_multiplicity(const Poly& a, int max_ext);

}  // namespace ramify

#endif  // RAMIFY_POLY_HPP_
