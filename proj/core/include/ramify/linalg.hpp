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

#ifndef RAMIFY_LINALG_HPP_
#define RAMIFY_LINALG_HPP_

// Exact linear algebra over a finite field and over the rational function
// field k(X), the latter represented by matrices with entries in k[X].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ramify/field.hpp"
#include "ramify/poly.hpp"

namespace ramify {

using Vec = std::vector<Code>;

class FieldMatrix {
 public:
  FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  FieldMatrix(FieldSpec field, const std::vector<std::vector<Code>>& rows);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Code& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Code at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  // Reduces in place to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  Vec apply(const Vec& v) const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> a_;
};

// Basis of {v : M v = 0}, one vector per free column (free entry 1).
std::vector<Vec> kernel_basis(const FieldMatrix& m);

// Some v with M v = rhs (free variables zero), or nullopt if inconsistent.
std::optional<Vec> solve(const FieldMatrix& m, const Vec& rhs);

using PolyVec = std::vector<Poly>;

class PolyMatrix {
 public:
  PolyMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  PolyVec column(std::size_t c) const;
  PolyMatrix transpose() const;

  std::string to_string(char var = 'X') const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> a_;
};

struct KXReduction {
  std::size_t rank = 0;
  std::vector<PolyVec> kernel;  // primitive, first non-zero entry monic
};

// Rank and right kernel over k(X) by fraction-free elimination.
KXReduction reduce_over_kX(const PolyMatrix& m);
std::size_t rank_over_kX(const PolyMatrix& m);

// Canonical basis of the row space over k(X): reduced echelon rows, each
// divided by its content and scaled so the pivot entry is monic. Two matrices
// have the same row space iff their canonical forms are equal.
PolyMatrix row_space_canonical(const PolyMatrix& m);

// Divides by the gcd of the entries and makes the first non-zero entry monic.
PolyVec primitive_part(PolyVec v);
bool proportional_over_kX(const PolyVec& u, const PolyVec& v);

}  // namespace ramify

#endif  // RAMIFY_LINALG_HPP_
