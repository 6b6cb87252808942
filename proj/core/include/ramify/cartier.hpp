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

#ifndef RAMIFY_CARTIER_HPP_
#define RAMIFY_CARTIER_HPP_

// The operator T_f(q) = q f' - f q' on k(x), viewed as a k(x^p)-linear map in
// the basis {1, x, ..., x^{p-1}}. Vectors over k(x^p) are stored with entries
// in k[X], X standing for x^p.

#include <cstddef>
#include <vector>

#include "ramify/linalg.hpp"
#include "ramify/poly.hpp"

namespace ramify {

// q f' - f q'. Throws ValidationError for f = 0.
Poly apply_T(const Poly& f, const Poly& q);

// Iterated application T_f^k(q).
Poly iterate_T(const Poly& f, const Poly& q, int k);

// q(x) = sum_{i<p} c_i(x^p) x^i; returns (c_0, ..., c_{p-1}) as polynomials in X.
PolyVec decompose(const Poly& q);
// Inverse of decompose.
Poly reassemble(const PolyVec& parts);

struct OperatorMatrix {
  Poly f;
  PolyMatrix matrix;  // p x p; column j = decompose(T_f(x^j))
};

OperatorMatrix operator_matrix(const Poly& f);

// Matrix-vector product over k[X].
PolyVec apply_matrix(const PolyMatrix& m, const PolyVec& v);

struct Subspace {
  std::size_t dim = 0;
  std::vector<PolyVec> basis;
};

// Kernel of T_f over k(x^p); basis vectors are primitive.
Subspace kernel_T(const Poly& f);
// Column space of the operator matrix in canonical echelon form.
Subspace image_T(const Poly& f);
// Whether q lies in the image of T_f (over k(x^p)).
bool in_image_T(const Poly& f, const Poly& q);
// Whether T_f and T_g have the same image.
bool image_equal(const Poly& f, const Poly& g);

struct ImageSurvey {
  std::size_t polynomials = 0;      // non-zero f examined
  std::size_t distinct_images = 0;  // distinct (p-1)-dimensional images found
};

// Exhausts the non-zero polynomials of degree <= max_degree over `field` and
// counts the distinct images of T_f. A sampling experiment only: finitely many
// hits say nothing about the images over the algebraic closure.
ImageSurvey image_survey(FieldSpec field, int max_degree);

}  // namespace ramify

#endif  // RAMIFY_CARTIER_HPP_
