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

#include "ramify/deform.hpp"

#include <algorithm>
#include <thread>

#include "ramify/cartier.hpp"
#include "ramify/error.hpp"

namespace ramify {

namespace {

NormalizedCover embed_normalized(const NormalizedCover& c, FieldSpec f) {
  return {c.cover.embed(f), c.source_change.embed(f), c.target_change.embed(f)};
}

void put_column(FieldMatrix& m, std::size_t col, const Poly& p) {
  if (p.degree() >= static_cast<int>(m.rows())) {
    throw ComputationError("tangent condition exceeds degree 2d-3");
  }
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, col) = p.coeff(r);
}

// Polynomials over the dual numbers k[t]/(t^2): value + t * tangent.
struct Dual {
  Poly value;
  Poly tangent;
};

Dual mul(const Dual& a, const Dual& b) {
  return {a.value * b.value, a.value * b.tangent + a.tangent * b.value};
}

Dual sub(const Dual& a, const Dual& b) { return {a.value - b.value, a.tangent - b.tangent}; }

Dual diff(const Dual& a) { return {derivative(a.value), derivative(a.tangent)}; }

// t-coefficient of the discriminant of (g + t g1)/(h + t h1).
Poly dual_discriminant_tangent(const Poly& g, const Poly& h, const Poly& g1, const Poly& h1) {
  const Dual G{g, g1};
  const Dual H{h, h1};
  return sub(mul(H, diff(G)), mul(G, diff(H))).tangent;
}

// t-coefficient of prod_i (x - c_i + t eps_i)^{l_i}.
Poly moving_roots_tangent(FieldSpec f, const std::vector<FieldElement>& points, const std::vector<int>& lengths,
                          const std::vector<Code>& eps) {
  Dual acc{Poly::constant(f, 1), Poly(f)};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Dual factor{Poly(f, {f.neg(points[i].code()), 1}), Poly::constant(f, eps[i])};
    for (int k = 0; k < lengths[i]; ++k) acc = mul(acc, factor);
  }
  return acc.tangent;
}

Poly from_slots(FieldSpec f, const Vec& v, std::size_t offset, std::size_t count) {
  return Poly(f, std::vector<Code>(v.begin() + static_cast<std::ptrdiff_t>(offset),
                                   v.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::kXD ? "xd" : "xli"; }

Variant parse_variant(std::string_view s) {
  if (s == "xd" || s == "XD") return Variant::kXD;
  if (s == "xli" || s == "Xli" || s == "XLI") return Variant::kXli;
  throw ValidationError("unknown variant \"" + std::string(s) + "\" (expected xd or xli)");
}

TangentSystem tangent_system(const NormalizedCover& c, Variant variant, int max_ext) {
  if (!is_chart_form(c.cover)) throw ValidationError("tangent system needs a chart-normalized cover");
  FieldSpec f = c.cover.field();
  std::vector<FieldElement> points;
  std::vector<int> lengths;
  if (variant == Variant::kXli) {
    RootsResult roots = roots_with_multiplicity(raw_discriminant(c.cover), max_ext);
    if (!roots.split()) {
      throw SplittingError("discriminant factor " + roots.residual.to_string() + " does not split within " +
                           std::to_string(max_ext) + " extensions");
    }
    f = roots.field;
    for (auto& r : roots.roots) {
      points.push_back(r.value);
      lengths.push_back(r.multiplicity);
    }
  }
  const NormalizedCover nc = embed_normalized(c, f);
  const int d = nc.cover.degree();
  const std::size_t slots = static_cast<std::size_t>(d - 1);
  const std::size_t rows = static_cast<std::size_t>(std::max(0, 2 * d - 2));
  FieldMatrix m(f, rows, 2 * slots + points.size());
  const Poly& g = nc.cover.g();
  const Poly& h = nc.cover.h();
  for (std::size_t i = 0; i < slots; ++i) {
    const Poly xi = Poly::monomial(f, 1, i);
    put_column(m, i, -apply_T(h, xi));
    put_column(m, slots + i, apply_T(g, xi));
  }
  std::vector<bool> degenerate;
  const Poly disc = raw_discriminant(nc.cover);
  const std::uint32_t p = f.characteristic();
  for (std::size_t j = 0; j < points.size(); ++j) {
    const Poly lin(f, {f.neg(points[j].code()), 1});
    const Code lj = f.from_int(lengths[j] % static_cast<int>(p));
    degenerate.push_back(lj == 0);
    put_column(m, 2 * slots + j, -exact_div(disc, lin).scale(lj));
  }
  return {nc, variant, std::move(m), static_cast<int>(slots), std::move(points), std::move(lengths),
          std::move(degenerate)};
}

DeformationVector unpack(const TangentSystem& s, const Vec& solution) {
  const FieldSpec f = s.field();
  const std::size_t n = static_cast<std::size_t>(s.slots_per_poly);
  DeformationVector v{from_slots(f, solution, 0, n), from_slots(f, solution, n, n), {}};
  v.eps.assign(solution.begin() + static_cast<std::ptrdiff_t>(2 * n), solution.end());
  return v;
}

Vec pack(const TangentSystem& s, const DeformationVector& v) {
  const std::size_t n = static_cast<std::size_t>(s.slots_per_poly);
  if (v.g1.degree() >= static_cast<int>(n) || v.h1.degree() >= static_cast<int>(n)) {
    throw ValidationError("deformation polynomials must have degree <= d-2");
  }
  Vec out(s.unknowns(), 0);
  const Poly g1 = v.g1.embed(s.field());
  const Poly h1 = v.h1.embed(s.field());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = g1.coeff(i);
    out[n + i] = h1.coeff(i);
  }
  if (s.variant == Variant::kXli) {
    if (v.eps.size() != s.branch_points.size()) throw ValidationError("wrong number of eps slots");
    std::copy(v.eps.begin(), v.eps.end(), out.begin() + static_cast<std::ptrdiff_t>(2 * n));
  }
  return out;
}

Poly first_order_defect(const TangentSystem& s, const DeformationVector& v) {
  const FieldSpec f = s.field();
  const Poly& g = s.cover.cover.g();
  const Poly& h = s.cover.cover.h();
  Poly defect = dual_discriminant_tangent(g, h, v.g1.embed(f), v.h1.embed(f));
  if (s.variant == Variant::kXli) defect -= moving_roots_tangent(f, s.branch_points, s.lengths, v.eps);
  return defect;
}

TangentSpace tangent_space(const NormalizedCover& c, Variant variant, int max_ext) {
  TangentSystem sys = tangent_system(c, variant, max_ext);
  TangentSpace out{sys, 0, {}};
  for (const Vec& k : kernel_basis(sys.matrix)) {
    DeformationVector v = unpack(sys, k);
    if (!first_order_defect(sys, v).is_zero()) {
      throw ComputationError("tangent basis vector fails the direct discriminant check");
    }
    out.basis.push_back(std::move(v));
  }
  out.dim = out.basis.size();
  return out;
}

std::size_t tangent_dim(const NormalizedCover& c, Variant variant, int max_ext) {
  const TangentSystem sys = tangent_system(c, variant, max_ext);
  return sys.unknowns() - sys.matrix.rank();
}

BruteForceResult brute_force_tangent(const NormalizedCover& c, Variant variant, int max_ext, std::uint64_t bound,
                                     int threads) {
  // Only the field, branch data and slot layout are taken from the system; the
  // matrix itself is not used.
  const TangentSystem sys = tangent_system(c, variant, max_ext);
  const FieldSpec f = sys.field();
  const std::size_t unknowns = sys.unknowns();
  const Code q = f.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < unknowns; ++i) {
    if (total > bound / q) {
      throw BudgetError("brute-force search space " + std::to_string(q) + "^" + std::to_string(unknowns) +
                        " exceeds the bound " + std::to_string(bound));
    }
    total *= q;
  }
  const std::size_t n = static_cast<std::size_t>(sys.slots_per_poly);
  const Poly& g = sys.cover.cover.g();
  const Poly& h = sys.cover.cover.h();

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    Vec tuple(unknowns, 0);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = 0; k < unknowns; ++k) {
        tuple[k] = rest % q;
        rest /= q;
      }
      const Poly g1 = from_slots(f, tuple, 0, n);
      const Poly h1 = from_slots(f, tuple, n, n);
      Poly lhs = dual_discriminant_tangent(g, h, g1, h1);
      if (variant == Variant::kXli) {
        const std::vector<Code> eps(tuple.begin() + static_cast<std::ptrdiff_t>(2 * n), tuple.end());
        lhs -= moving_roots_tangent(f, sys.branch_points, sys.lengths, eps);
      }
      if (lhs.is_zero()) ++hits;
    }
    return hits;
  };

  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<std::uint64_t> partial(workers, 0);
  if (workers == 1) {
    partial[0] = count_range(0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = count_range(total * w / workers, total * (w + 1) / workers); });
    }
    for (auto& t : pool) t.join();
  }
  BruteForceResult out;
  out.searched = total;
  for (auto x : partial) out.solutions += x;
  std::uint64_t power = 1;
  std::size_t dim = 0;
  while (power < out.solutions) {
    power *= q;
    ++dim;
  }
  if (power != out.solutions) {
    throw ComputationError("brute-force solution count " + std::to_string(out.solutions) +
                           " is not a power of " + std::to_string(q));
  }
  out.dim = dim;
  return out;
}

std::vector<Poly> deformed_discriminant(const Poly& g, const Poly& h,
                                        const std::vector<std::pair<Poly, Poly>>& corrections, int order) {
  const FieldSpec f = g.field();
  std::vector<Poly> G{g};
  std::vector<Poly> H{h};
  for (const auto& [gr, hr] : corrections) {
    G.push_back(gr.embed(f));
    H.push_back(hr.embed(f));
  }
  std::vector<Poly> dG, dH;
  for (const auto& x : G) dG.push_back(derivative(x));
  for (const auto& x : H) dH.push_back(derivative(x));
  std::vector<Poly> out;
  for (int r = 0; r < order; ++r) {
    Poly coeff(f);
    for (int i = 0; i <= r; ++i) {
      const int j = r - i;
      if (i >= static_cast<int>(H.size()) || j >= static_cast<int>(G.size())) continue;
      coeff += H[static_cast<std::size_t>(i)] * dG[static_cast<std::size_t>(j)] -
               G[static_cast<std::size_t>(j)] * dH[static_cast<std::size_t>(i)];
    }
    out.push_back(std::move(coeff));
  }
  return out;
}

LiftResult lift_deformation(const NormalizedCover& c, const DeformationVector& v, int order) {
  if (order < 1 || order > 8) throw ValidationError("lift order must be in [1, 8]");
  const TangentSystem sys = tangent_system(c, Variant::kXD, 1);
  const FieldSpec f = sys.field();
  if (!first_order_defect(sys, v).is_zero()) {
    throw ValidationError("vector is not a first-order deformation in X_D");
  }
  LiftResult out{false, order, {}, std::nullopt, Poly(f)};
  if (order >= 2) out.corrections.emplace_back(v.g1.embed(f), v.h1.embed(f));
  const Poly& g = sys.cover.cover.g();
  const Poly& h = sys.cover.cover.h();
  for (int r = 2; r < order; ++r) {
    // t^r coefficient with the order-r correction still zero
    const Poly rest = deformed_discriminant(g, h, out.corrections, r + 1).back();
    Vec rhs(sys.matrix.rows(), 0);
    if (rest.degree() >= static_cast<int>(rhs.size())) {
      throw ComputationError("lift residual exceeds degree 2d-3");
    }
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = f.neg(rest.coeff(i));
    const auto sol = solve(sys.matrix, rhs);
    if (!sol) {
      out.obstructed_at = r;
      out.residual = rest;
      return out;
    }
    const DeformationVector step = unpack(sys, *sol);
    out.corrections.emplace_back(step.g1, step.h1);
  }
  out.success = true;
  return out;
}

DeformationVector chart_tangent(const NormalizedCover& c, const Poly& dg, const Poly& dh) {
  const Cover& cov = c.cover;
  const FieldSpec f = cov.field();
  const std::size_t d = static_cast<std::size_t>(cov.degree());
  const Poly G = dg.embed(f);
  const Poly H = dh.embed(f);
  if (G.degree() > static_cast<int>(d) || H.degree() > static_cast<int>(d)) {
    throw ValidationError("tangent direction exceeds the cover degree");
  }
  // g_1 = dG + a g + b h, h_1 = dH + c g + e h with the x^d, x^{d-1} terms killed;
  // uses g monic of degree d without x^{d-1} term and h monic of degree d-1.
  const Code a = f.neg(G.coeff(d));
  const Code b = d >= 1 ? f.neg(G.coeff(d - 1)) : 0;
  const Code cc = f.neg(H.coeff(d));
  const Code e = d >= 1 ? f.neg(H.coeff(d - 1)) : 0;
  Poly g1 = G + cov.g().scale(a) + cov.h().scale(b);
  Poly h1 = H + cov.g().scale(cc) + cov.h().scale(e);
  if (g1.degree() > static_cast<int>(d) - 2 || h1.degree() > static_cast<int>(d) - 2) {
    throw ComputationError("chart projection left terms above degree d-2");
  }
  return {std::move(g1), std::move(h1), {}};
}

Poly expand_in_xp(const Poly& in_x_p) {
  const FieldSpec f = in_x_p.field();
  const std::size_t p = f.characteristic();
  std::vector<Code> c;
  const auto& src = in_x_p.coeffs();
  if (!src.empty()) c.assign((src.size() - 1) * p + 1, 0);
  for (std::size_t k = 0; k < src.size(); ++k) c[k * p] = src[k];
  return Poly(f, std::move(c));
}

std::optional<ShapeWitness> solve_shape(const NormalizedCover& c, const DeformationVector& v) {
  const FieldSpec f = c.cover.field();
  const std::size_t p = f.characteristic();
  const PolyVec dg = decompose(c.cover.g());
  const PolyVec dh = decompose(c.cover.h());
  const PolyVec dg1 = decompose(v.g1.embed(f));
  const PolyVec dh1 = decompose(v.h1.embed(f));
  // unknowns (alpha, beta, gamma, s):  alpha dh + beta dg - s dg1 = 0,
  //                                    gamma dg - beta dh - s dh1 = 0
  PolyMatrix m(f, 2 * p, 4);
  for (std::size_t i = 0; i < p; ++i) {
    m.at(i, 0) = dh[i];
    m.at(i, 1) = dg[i];
    m.at(i, 3) = -dg1[i];
    m.at(p + i, 1) = -dh[i];
    m.at(p + i, 2) = dg[i];
    m.at(p + i, 3) = -dh1[i];
  }
  const KXReduction red = reduce_over_kX(m);
  for (const PolyVec& k : red.kernel) {
    if (k[3].is_zero()) continue;
    ShapeWitness w{{k[0], k[3]}, {k[1], k[3]}, {k[2], k[3]}};
    const Poly s = expand_in_xp(k[3]);
    const Poly al = expand_in_xp(k[0]);
    const Poly be = expand_in_xp(k[1]);
    const Poly ga = expand_in_xp(k[2]);
    const Poly& g = c.cover.g();
    const Poly& h = c.cover.h();
    if (s * v.g1.embed(f) != al * h + be * g) continue;
    if (s * v.h1.embed(f) != ga * g - be * h) continue;
    return w;
  }
  return std::nullopt;
}

}  // namespace ramify
