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

#include "ramify/census.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "ramify/deform.hpp"
#include "ramify/error.hpp"

namespace ramify {

namespace {

std::uint64_t checked_pow(std::uint64_t q, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX / q) throw BudgetError("plane count overflows 64 bits");
    r *= q;
  }
  return r;
}

struct Cell {
  std::vector<std::size_t> free1;
  std::vector<std::size_t> free2;
  std::size_t p1 = 0;
  std::size_t p2 = 0;
  std::uint64_t offset = 0;
  std::uint64_t count = 0;
};

std::vector<Cell> echelon_cells(FieldSpec f, std::size_t n, bool top_only) {
  std::vector<Cell> cells;
  std::uint64_t offset = 0;
  for (std::size_t p1 = 0; p1 + 1 < n; ++p1) {
    if (top_only && p1 != 0) break;
    for (std::size_t p2 = p1 + 1; p2 < n; ++p2) {
      Cell c;
      c.p1 = p1;
      c.p2 = p2;
      for (std::size_t j = p1 + 1; j < n; ++j) {
        if (j != p2) c.free1.push_back(j);
      }
      for (std::size_t j = p2 + 1; j < n; ++j) c.free2.push_back(j);
      c.count = checked_pow(f.size(), c.free1.size() + c.free2.size());
      c.offset = offset;
      offset += c.count;
      cells.push_back(std::move(c));
    }
  }
  return cells;
}

std::uint64_t cells_total(const std::vector<Cell>& cells) {
  return cells.empty() ? 0 : cells.back().offset + cells.back().count;
}

// Visits global indices [begin, end) of the given cells.
void visit_cells(FieldSpec f, std::size_t n, const std::vector<Cell>& cells, std::uint64_t begin, std::uint64_t end,
                 const EchelonVisitor& visit) {
  const Code q = f.size();
  for (const Cell& c : cells) {
    const std::uint64_t lo = std::max(begin, c.offset);
    const std::uint64_t hi = std::min(end, c.offset + c.count);
    if (lo >= hi) continue;
    const std::size_t k1 = c.free1.size();
    const std::size_t k = k1 + c.free2.size();
    std::vector<Code> digits(k, 0);
    std::uint64_t rest = lo - c.offset;
    for (std::size_t i = 0; i < k; ++i) {
      digits[i] = rest % q;
      rest /= q;
    }
    Vec r1(n, 0);
    Vec r2(n, 0);
    r1[c.p1] = 1;
    r2[c.p2] = 1;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      for (std::size_t i = 0; i < k1; ++i) r1[c.free1[i]] = digits[i];
      for (std::size_t i = k1; i < k; ++i) r2[c.free2[i - k1]] = digits[i];
      visit(idx, r1, r2);
      for (std::size_t i = 0; i < k; ++i) {
        if (++digits[i] < q) break;
        digits[i] = 0;
      }
    }
  }
}

// Row with column j holding the coefficient of x^{d-j}.
Poly row_poly(FieldSpec f, const Vec& row) {
  std::vector<Code> c(row.rbegin(), row.rend());
  return Poly(f, std::move(c));
}

struct Accumulator {
  std::uint64_t class_count = 0;
  std::map<std::size_t, std::uint64_t> dims;
  std::map<std::size_t, std::uint64_t> dims_xli;
  std::uint64_t unavailable = 0;
  std::uint64_t rep_index = 0;
  std::optional<Cover> rep;
  std::vector<std::pair<std::uint64_t, Cover>> examples;
};

using Buckets = std::map<Poly, Accumulator>;

void merge_into(Accumulator& a, Accumulator&& b, std::size_t example_limit) {
  a.class_count += b.class_count;
  for (auto [k, v] : b.dims) a.dims[k] += v;
  for (auto [k, v] : b.dims_xli) a.dims_xli[k] += v;
  a.unavailable += b.unavailable;
  if (!a.rep || (b.rep && b.rep_index < a.rep_index)) {
    a.rep = std::move(b.rep);
    a.rep_index = b.rep_index;
  }
  for (auto& e : b.examples) a.examples.push_back(std::move(e));
  std::sort(a.examples.begin(), a.examples.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  if (a.examples.size() > example_limit) a.examples.erase(a.examples.begin() + static_cast<std::ptrdiff_t>(example_limit), a.examples.end());
}

std::size_t frobenius_orbit(const Poly& disc) {
  const FieldSpec f = disc.field();
  auto frob = [&](const Poly& a) {
    std::vector<Code> c = a.coeffs();
    for (auto& x : c) x = f.frobenius(x);
    return Poly(f, std::move(c));
  };
  Poly cur = frob(disc);
  std::size_t k = 1;
  while (!(cur == disc)) {
    cur = frob(cur);
    ++k;
  }
  return k;
}

void check_degree(int d) {
  if (d < 1) throw ValidationError("census degree must be >= 1");
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // product over i < k of (q^{n-i} - 1) / (q^{i+1} - 1), kept exact step by step
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= checked_pow(q, n - i) - 1;
    den *= checked_pow(q, i + 1) - 1;
  }
  return num / den;
}

void for_each_echelon_plane(FieldSpec field, std::size_t n, const EchelonVisitor& visit) {
  const auto cells = echelon_cells(field, n, false);
  visit_cells(field, n, cells, 0, cells_total(cells), visit);
}

std::uint64_t count_echelon_planes(FieldSpec field, std::size_t n) {
  std::uint64_t count = 0;
  for_each_echelon_plane(field, n, [&](std::uint64_t, const Vec&, const Vec&) { ++count; });
  return count;
}

std::uint64_t count_top_degree_planes(FieldSpec field, int d) {
  check_degree(d);
  return cells_total(echelon_cells(field, static_cast<std::size_t>(d) + 1, true));
}

std::vector<Cover> enumerate_covers(FieldSpec field, int d, std::uint64_t budget) {
  check_degree(d);
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  const auto cells = echelon_cells(field, n, true);
  const std::uint64_t total = cells_total(cells);
  if (total > budget) {
    throw BudgetError(std::to_string(total) + " planes exceed the budget of " + std::to_string(budget));
  }
  std::vector<Cover> out;
  visit_cells(field, n, cells, 0, total, [&](std::uint64_t, const Vec& r1, const Vec& r2) {
    Poly g = row_poly(field, r1);
    Poly h = row_poly(field, r2);
    if (gcd(g, h).degree() > 0) return;
    if ((h * derivative(g) - g * derivative(h)).is_zero()) return;
    out.push_back(Cover::make(std::move(g), std::move(h)));
  });
  return out;
}

bool CensusRecord::tame_lengths(std::uint32_t p) const {
  return std::all_of(length_multiset.begin(), length_multiset.end(),
                     [p](int l) { return l < static_cast<int>(p); });
}

Census census_by_disc(FieldSpec field, int d, const CensusOptions& options) {
  check_degree(d);
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  const auto cells = echelon_cells(field, n, true);
  const std::uint64_t total = cells_total(cells);
  if (total > options.budget) {
    throw BudgetError(std::to_string(total) + " planes exceed the budget of " + std::to_string(options.budget));
  }

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    Buckets buckets;
    visit_cells(field, n, cells, begin, end, [&](std::uint64_t idx, const Vec& r1, const Vec& r2) {
      Poly g = row_poly(field, r1);
      Poly h = row_poly(field, r2);
      if (gcd(g, h).degree() > 0) return;
      const Poly raw = h * derivative(g) - g * derivative(h);
      if (raw.is_zero()) return;
      Accumulator& acc = buckets[monic(raw)];
      Cover c = Cover::make(std::move(g), std::move(h));
      ++acc.class_count;
      if (options.tangent || options.xli) {
        std::optional<NormalizedCover> nc;
        try {
          nc = normalize(c, options.max_ext);
        } catch (const SplittingError&) {
          ++acc.unavailable;
        }
        if (nc && options.tangent) {
          const std::size_t dim = tangent_dim(*nc, Variant::kXD, 1);
          ++acc.dims[dim];
          if (dim > 0 && acc.examples.size() < options.examples) acc.examples.emplace_back(idx, c);
        }
        if (nc && options.xli) {
          try {
            ++acc.dims_xli[tangent_dim(*nc, Variant::kXli, options.max_ext)];
          } catch (const SplittingError&) {
          }
        }
      }
      if (!acc.rep) {
        acc.rep = std::move(c);
        acc.rep_index = idx;
      }
    });
    return buckets;
  };

  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.threads, 1)),
                                                         std::max<std::uint64_t>(total, 1)));
  std::vector<Buckets> parts(workers);
  if (workers == 1) {
    parts[0] = run(0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { parts[w] = run(total * w / workers, total * (w + 1) / workers); });
    }
    for (auto& t : pool) t.join();
  }
  Buckets merged = std::move(parts[0]);
  for (std::uint64_t w = 1; w < workers; ++w) {
    for (auto& [disc, acc] : parts[w]) merge_into(merged[disc], std::move(acc), options.examples);
  }

  Census out{field, d, total, 0, {}, 0.0};
  for (auto& [disc, acc] : merged) {
    const Cover& rep = *acc.rep;
    LengthsResult lr = differential_lengths_partial(rep, options.max_ext);
    std::vector<int> ms = length_multiset(rep);
    const bool wild = std::any_of(ms.begin(), ms.end(),
                                  [&](int l) { return l >= static_cast<int>(field.characteristic()); });
    std::vector<Cover> examples;
    for (auto& e : acc.examples) examples.push_back(std::move(e.second));
    const std::size_t orbit = frobenius_orbit(disc);
    out.total_classes += acc.class_count;
    out.classes_up_to_galois += static_cast<double>(acc.class_count) / static_cast<double>(orbit);
    out.records.push_back(CensusRecord{disc, std::move(lr.divisor), std::move(lr.residual), std::move(ms),
                                       acc.class_count, std::move(acc.dims), std::move(acc.dims_xli),
                                       acc.unavailable, wild, rep, acc.rep_index, std::move(examples), orbit});
  }
  return out;
}

TheoremReport verify_theorem_char23(FieldSpec field, int d, const CensusOptions& options) {
  const std::uint32_t p = field.characteristic();
  if (p != 2 && p != 3) throw ValidationError("theorem check applies to characteristic 2 or 3");
  CensusOptions opts = options;
  opts.tangent = true;
  TheoremReport rep{census_by_disc(field, d, opts), 0, 0, 0, {}, {}, 0};
  for (const CensusRecord& r : rep.census.records) {
    rep.length_one_points += static_cast<std::uint64_t>(std::count(r.length_multiset.begin(), r.length_multiset.end(), 1));
    if (r.tame_lengths(p)) {
      rep.tame_classes += r.class_count;
      rep.unchecked_classes += r.tangent_unavailable;
      for (const auto& [dim, count] : r.tangent_dims) {
        if (dim == 0) continue;
        for (const Cover& c : r.positive_dim_examples) rep.violations.push_back({r.disc, c, dim});
        if (r.positive_dim_examples.empty()) rep.violations.push_back({r.disc, r.representative, dim});
      }
    } else {
      rep.wild_classes += r.class_count;
      for (const auto& [dim, count] : r.tangent_dims) rep.wild_dims[dim] += count;
    }
  }
  return rep;
}

}  // namespace ramify
