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

#ifndef RAMIFY_COVER_HPP_
#define RAMIFY_COVER_HPP_

// Degree-d rational maps P^1 -> P^1 given by a coprime pair (g, h), their
// discriminants and differential lengths, Mobius actions on source and
// target, equivalence (equality of the 2-plane span{g, h}), and the affine
// chart normalization used by the deformation code.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramify/field.hpp"
#include "ramify/linalg.hpp"
#include "ramify/poly.hpp"

namespace ramify {

// A point of P^1: a field element (possibly in an extension) or infinity.
class Point {
 public:
  static Point infinity() { return Point(); }
  Point(FieldElement x) : x_(std::move(x)) {}  // NOLINT(google-explicit-constructor)

  bool is_infinity() const { return !x_.has_value(); }
  const FieldElement& value() const { return *x_; }
  Point embed(FieldSpec target) const;
  std::string to_string() const;  // "inf" or the element format

  // Finite points in different fields compare after embedding into the larger.
  friend bool operator==(const Point& a, const Point& b);

 private:
  Point() = default;
  std::optional<FieldElement> x_;
};

// z -> (a z + b) / (c z + d), ad - bc != 0.
class Mobius {
 public:
  Mobius(FieldSpec field, Code a, Code b, Code c, Code d);
  static Mobius identity(FieldSpec field) { return {field, 1, 0, 0, 1}; }
  // z -> (w z + 1) / z, sending infinity to w.
  static Mobius moving_infinity_to(FieldElement w);

  FieldSpec field() const { return field_; }
  Code a() const { return a_; }
  Code b() const { return b_; }
  Code c() const { return c_; }
  Code d() const { return d_; }
  bool is_identity() const { return a_ == d_ && b_ == 0 && c_ == 0; }

  Mobius inverse() const;
  // (*this)(inner(z)).
  Mobius compose(const Mobius& inner) const;
  Mobius embed(FieldSpec target) const;
  Point apply(const Point& p) const;

  // "y -> (a*y + b)/(c*y + d)" in a compact form, e.g. "y -> y + 1".
  std::string to_string(char var = 'y') const;

  friend bool operator==(const Mobius& x, const Mobius& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  FieldSpec field_;
  Code a_, b_, c_, d_;
};

class Cover {
 public:
  // Validates gcd(g, h) = 1, max(deg g, deg h) >= 1 and h g' - g h' != 0.
  static Cover make(Poly g, Poly h);
  // "g / h"; "/ h" may be omitted; each side may be parenthesized.
  static Cover parse(FieldSpec field, std::string_view text);

  const Poly& g() const { return g_; }
  const Poly& h() const { return h_; }
  int degree() const { return d_; }
  FieldSpec field() const { return g_.field(); }

  Cover embed(FieldSpec target) const;
  std::string to_string() const;

  // Canonical reduced row echelon 2 x (d+1) matrix of span{g, h}; column j
  // holds the coefficient of x^{d-j}.
  FieldMatrix plane() const;

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.d_ == b.d_ && a.g_ == b.g_ && a.h_ == b.h_;
  }

 private:
  Cover(Poly g, Poly h, int d) : g_(std::move(g)), h_(std::move(h)), d_(d) {}
  Poly g_;
  Poly h_;
  int d_;
};

// h g' - g h' (not normalized).
std::ostream& operator<<(std::ostream& os, const Cover& c);

Poly raw_discriminant(const Cover& c);
// monic(h g' - g h').
Poly discriminant(const Cover& c);

// Finite points in increasing code order, infinity last.
class Divisor {
 public:
  Divisor() = default;
  void add(Point p, int multiplicity);

  const std::vector<std::pair<Point, int>>& entries() const { return entries_; }
  int total() const;
  int multiplicity(const Point& p) const;  // 0 if absent
  std::vector<int> multiset() const;       // sorted ascending
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Divisor& a, const Divisor& b);

 private:
  std::vector<std::pair<Point, int>> entries_;
};

struct LengthsResult {
  Divisor divisor;  // all points found within the extension bound, plus infinity
  Poly residual;    // unsplit part of the discriminant, 1 if fully split
  bool split() const { return residual.is_one(); }
};

LengthsResult differential_lengths_partial(const Cover& c, int max_ext);
// Throws SplittingError when the discriminant does not split within max_ext.
Divisor differential_lengths(const Cover& c, int max_ext);
// Multiset of all differential lengths, computed by squarefree decomposition
// (no root finding). Sorted ascending; includes l_inf when positive.
std::vector<int> length_multiset(const Cover& c);
int length_at_infinity(const Cover& c);

struct RamificationIndex {
  int e = 1;
  bool wild = false;
};

RamificationIndex ram_index(const Cover& c, const Point& p);

// (g, h) -> (a g + b h, c g + d h): the map m o f.
Cover postcompose(const Cover& c, const Mobius& m);
// f o m, denominators cleared by (c x + d)^deg.
Cover precompose(const Cover& c, const Mobius& m);

// Applies the same coordinate changes to an arbitrary pair of polynomials of
// degree <= d (used to transport tangent vectors).
std::pair<Poly, Poly> precompose_pair(const Poly& g, const Poly& h, int d, const Mobius& m);
std::pair<Poly, Poly> postcompose_pair(const Poly& g, const Poly& h, const Mobius& m);

// m with postcompose(a, m) == b, if span{g, h} agree.
std::optional<Mobius> equivalent(const Cover& a, const Cover& b);

struct NormalizedCover {
  Cover cover;            // over the field of source_change
  Mobius source_change;   // cover = postcompose(precompose(original, source), target)
  Mobius target_change;
};

// Chart form: deg g = d, deg h = d - 1, both monic, no x^{d-1} term in g,
// unramified at infinity.
bool is_chart_form(const Cover& c);

// Moves the least unramified point (infinity first, then elements in code
// order, extending the field only when needed) to infinity and its image to
// infinity, then rescales into chart form. Throws SplittingError if no
// unramified point exists within max_ext extensions.
NormalizedCover normalize(const Cover& c, int max_ext);

}  // namespace ramify

#endif  // RAMIFY_COVER_HPP_
