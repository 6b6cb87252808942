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

#include "ramify/cartier.hpp"

#include <set>
#include <utility>

#include "ramify/error.hpp"

namespace ramify {

Poly apply_T(const Poly& f, const Poly& q) {
  if (f.is_zero()) throw ValidationError("T_f requires f != 0");
  return q * derivative(f) - f * derivative(q);
}

Poly iterate_T(const Poly& f, const Poly& q, int k) {
  Poly r = q;
  for (int i = 0; i < k; ++i) r = apply_T(f, r);
  return r;
}

PolyVec decompose(const Poly& q) {
  const FieldSpec field = q.field();
  const std::size_t p = field.characteristic();
  std::vector<std::vector<Code>> parts(p);
  const auto& c = q.coeffs();
  for (std::size_t n = 0; n < c.size(); ++n) {
    auto& part = parts[n % p];
    if (part.size() <= n / p) part.resize(n / p + 1, 0);
    part[n / p] = c[n];
  }
  PolyVec out;
  out.reserve(p);
  for (auto& part : parts) out.emplace_back(field, std::move(part));
  return out;
}

Poly reassemble(const PolyVec& parts) {
  if (parts.empty()) throw ValidationError("reassemble of an empty vector");
  const FieldSpec field = parts.front().field();
  const std::size_t p = field.characteristic();
  if (parts.size() != p) throw ValidationError("reassemble expects p components");
  std::vector<Code> c;
  for (std::size_t i = 0; i < p; ++i) {
    const auto& pc = parts[i].coeffs();
    for (std::size_t k = 0; k < pc.size(); ++k) {
      const std::size_t n = k * p + i;
      if (c.size() <= n) c.resize(n + 1, 0);
      c[n] = pc[k];
    }
  }
  return Poly(field, std::move(c));
}

OperatorMatrix operator_matrix(const Poly& f) {
  if (f.is_zero()) throw ValidationError("T_f requires f != 0");
  const FieldSpec field = f.field();
  const std::size_t p = field.characteristic();
  PolyMatrix m(field, p, p);
  for (std::size_t j = 0; j < p; ++j) {
    const PolyVec col = decompose(apply_T(f, Poly::monomial(field, 1, j)));
    for (std::size_t i = 0; i < p; ++i) m.at(i, j) = col[i];
  }
  return {f, std::move(m)};
}

PolyVec apply_matrix(const PolyMatrix& m, const PolyVec& v) {
  if (v.size() != m.cols()) throw ValidationError("dimension mismatch in apply_matrix");
  PolyVec out(m.rows(), Poly(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  }
  return out;
}

Subspace kernel_T(const Poly& f) {
  KXReduction r = reduce_over_kX(operator_matrix(f).matrix);
  return {r.kernel.size(), std::move(r.kernel)};
}

Subspace image_T(const Poly& f) {
  const PolyMatrix canon = row_space_canonical(operator_matrix(f).matrix.transpose());
  Subspace s;
  s.dim = canon.rows();
  for (std::size_t r = 0; r < canon.rows(); ++r) {
    PolyVec v;
    for (std::size_t c = 0; c < canon.cols(); ++c) v.push_back(canon.at(r, c));
    s.basis.push_back(std::move(v));
  }
  return s;
}

bool in_image_T(const Poly& f, const Poly& q) {
  const PolyMatrix m = operator_matrix(f).matrix;
  const PolyVec target = decompose(q);
  PolyMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = target[i];
  }
  return rank_over_kX(aug) == rank_over_kX(m);
}

bool image_equal(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw ValidationError("image_equal requires non-zero inputs");
  return row_space_canonical(operator_matrix(f).matrix.transpose()) ==
         row_space_canonical(operator_matrix(g).matrix.transpose());
}

ImageSurvey image_survey(FieldSpec field, int max_degree) {
  ImageSurvey survey;
  std::set<std::vector<std::vector<Code>>> seen;
  const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
  std::vector<Code> coeffs(n, 0);
  // odometer over all coefficient vectors, skipping zero
  while (true) {
    std::size_t i = 0;
    while (i < n && coeffs[i] + 1 == field.size()) coeffs[i++] = 0;
    if (i == n) break;
    ++coeffs[i];
    const Poly f(field, coeffs);
    ++survey.polynomials;
    const PolyMatrix canon = row_space_canonical(operator_matrix(f).matrix.transpose());
    std::vector<std::vector<Code>> key;
    for (std::size_t r = 0; r < canon.rows(); ++r) {
      for (std::size_t c = 0; c < canon.cols(); ++c) key.push_back(canon.at(r, c).coeffs());
    }
    seen.insert(std::move(key));
  }
  survey.distinct_images = seen.size();
  return survey;
}

}  // namespace ramify
