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

#include <utility>

#include "ramify/error.hpp"
#include "ramify/linalg.hpp"

namespace ramify {

PolyMatrix::PolyMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Poly(field)) {}

PolyVec PolyMatrix::column(std::size_t c) const {
  PolyVec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::string PolyMatrix::to_string(char var) const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ", ";
      out += at(r, c).to_string(var);
    }
    out += "]";
  }
  return out + "]";
}

PolyVec primitive_part(PolyVec v) {
  if (v.empty()) return v;
  const FieldSpec f = v.front().field();
  Poly content(f);
  for (const auto& e : v) content = gcd(content, e);
  if (content.is_zero()) return v;
  for (auto& e : v) e = exact_div(e, content);
  for (const auto& e : v) {
    if (!e.is_zero()) {
      const Code s = f.inv(e.lead());
      for (auto& x : v) x = x.scale(s);
      break;
    }
  }
  return v;
}

bool proportional_over_kX(const PolyVec& u, const PolyVec& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    }
  }
  return true;
}

namespace {

struct Echelon {
  std::vector<PolyVec> rows;        // non-zero rows, reduced, primitive
  std::vector<std::size_t> pivots;  // pivot column per row
};

// Fraction-free Gauss-Jordan: row_i <- (P/g) row_i - (a/g) row_r with g = gcd(P, a).
Echelon echelon(const PolyMatrix& m) {
  std::vector<PolyVec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    PolyVec row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    // lowest-degree non-zero pivot keeps entries small
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      if (piv == rows.size() || rows[i][c].degree() < rows[piv][c].degree()) piv = i;
    }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    rows[r] = primitive_part(rows[r]);
    const Poly& pivot = rows[r][c];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Poly a = rows[i][c];
      const Poly g = gcd(pivot, a);
      const Poly mp = exact_div(pivot, g);
      const Poly ma = exact_div(a, g);
      for (std::size_t k = 0; k < m.cols(); ++k) rows[i][k] = mp * rows[i][k] - ma * rows[r][k];
      rows[i] = primitive_part(rows[i]);
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    PolyVec row = primitive_part(rows[i]);
    const FieldSpec f = m.field();
    const Code s = f.inv(row[out.pivots[i]].lead());
    for (auto& e : row) e = e.scale(s);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

KXReduction reduce_over_kX(const PolyMatrix& m) {
  const Echelon e = echelon(m);
  KXReduction out;
  out.rank = e.rows.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    // v_j = L, v_{pivot_r} = -row_r[j] * L / P_r, where L = lcm of the pivots
    Poly lcm = Poly::constant(m.field(), 1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.rows[r][j].is_zero()) continue;
      const Poly& pr = e.rows[r][e.pivots[r]];
      lcm = exact_div(lcm * pr, gcd(lcm, pr));
    }
    PolyVec v(m.cols(), Poly(m.field()));
    v[j] = lcm;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.rows[r][j].is_zero()) continue;
      const Poly& pr = e.rows[r][e.pivots[r]];
      v[e.pivots[r]] = -(e.rows[r][j] * exact_div(lcm, pr));
    }
    out.kernel.push_back(primitive_part(std::move(v)));
  }
  return out;
}

std::size_t rank_over_kX(const PolyMatrix& m) { return echelon(m).rows.size(); }

PolyMatrix row_space_canonical(const PolyMatrix& m) {
  const Echelon e = echelon(m);
  PolyMatrix out(m.field(), e.rows.size(), m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = e.rows[r][c];
  }
  return out;
}

}  // namespace ramify
