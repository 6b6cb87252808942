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

#include "ramify/linalg.hpp"

#include <utility>

#include "ramify/error.hpp"

namespace ramify {

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(FieldSpec field, const std::vector<std::vector<Code>>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix rows");
    for (Code c : r) {
      if (!field.is_valid(c)) throw ValidationError("matrix entry out of range");
      a_.push_back(c);
    }
  }
}

std::vector<std::size_t> FieldMatrix::rref() {
  const FieldSpec f = field_;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(piv, k), at(r, k));
    }
    const Code inv = f.inv(at(r, c));
    for (std::size_t k = c; k < cols_; ++k) at(r, k) = f.mul(at(r, k), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Code factor = at(i, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols_; ++k) at(i, k) = f.sub(at(i, k), f.mul(factor, at(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FieldMatrix::rank() const {
  FieldMatrix copy = *this;
  return copy.rref().size();
}

Vec FieldMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw ValidationError("dimension mismatch in matrix-vector product");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Code s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = field_.add(s, field_.mul(at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

std::vector<Vec> kernel_basis(const FieldMatrix& m) {
  FieldMatrix r = m;
  const auto pivots = r.rref();
  const FieldSpec f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols(), 0);
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const FieldMatrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw ValidationError("dimension mismatch in solve");
  FieldMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec v(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = aug.at(i, m.cols());
  return v;
}

}  // namespace ramify
