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

#include "ramify_cli/json_io.hpp"

#include "ramify/error.hpp"

namespace ramify::cli {

json to_json(const Point& p) { return p.to_string(); }

json to_json(const Divisor& d) {
  json out = json::array();
  for (const auto& [pt, m] : d.entries()) out.push_back({{"point", to_json(pt)}, {"mult", m}});
  return out;
}

json to_json(const Mobius& m, char var) { return m.to_string(var); }

json to_json(const NormalizedCover& n) {
  return {{"cover", n.cover.to_string()},
          {"field", n.cover.field().name()},
          {"source_change", to_json(n.source_change, 'x')},
          {"target_change", to_json(n.target_change, 'y')}};
}

json to_json(const DeformationVector& v, FieldSpec field) {
  json eps = json::array();
  for (Code e : v.eps) eps.push_back(field.format(e));
  return {{"g1", v.g1.to_string()}, {"h1", v.h1.to_string()}, {"eps", eps}};
}

json to_json(const PolyVec& v) {
  json out = json::array();
  for (const Poly& p : v) out.push_back(p.to_string('X'));
  return out;
}

json to_json(const CensusRecord& r) {
  json dims = json::object();
  for (auto [k, v] : r.tangent_dims) dims[std::to_string(k)] = v;
  json dims_xli = json::object();
  for (auto [k, v] : r.tangent_dims_xli) dims_xli[std::to_string(k)] = v;
  json examples = json::array();
  for (const Cover& c : r.positive_dim_examples) examples.push_back(c.to_string());
  return {{"disc", r.disc.to_string()},
          {"lengths", to_json(r.lengths)},
          {"split", r.split()},
          {"residual", r.residual.to_string()},
          {"length_multiset", r.length_multiset},
          {"class_count", r.class_count},
          {"tangent_dims", dims},
          {"tangent_dims_xli", dims_xli},
          {"tangent_unavailable", r.tangent_unavailable},
          {"wild", r.wild},
          {"representative", r.representative.to_string()},
          {"positive_dim_examples", examples},
          {"galois_orbit", r.galois_orbit}};
}

json to_json(const FamilyReport& r) {
  json support = json::array();
  for (const Point& p : r.support) support.push_back(to_json(p));
  json fibers = json::array();
  for (const FamilyFiber& f : r.fibers) {
    json ram = json::array();
    for (const RamificationIndex& e : f.ram) ram.push_back({{"e", e.e}, {"wild", e.wild}});
    fibers.push_back({{"t", f.t.to_string()},
                      {"cover", f.cover.to_string()},
                      {"disc", f.disc.to_string()},
                      {"lengths", to_json(f.lengths)},
                      {"split", f.split},
                      {"residual", f.residual.to_string()},
                      {"ram", ram}});
  }
  json pairs = json::array();
  for (auto [i, j] : r.equivalent_pairs) pairs.push_back({i, j});
  json skipped = json::array();
  for (const FieldElement& t : r.skipped) skipped.push_back(t.to_string());
  return {{"support", support},
          {"fibers", fibers},
          {"skipped", skipped},
          {"degree_constant", r.degree_constant},
          {"disc_constant", r.disc_constant},
          {"length_divisor_constant", r.length_divisor_constant},
          {"pairwise_inequivalent", r.pairwise_inequivalent},
          {"equivalent_pairs", pairs}};
}

Divisor divisor_from_json(const json& j, FieldSpec field) {
  if (!j.is_array()) throw ValidationError("divisor JSON must be an array");
  Divisor d;
  for (const auto& e : j) {
    const std::string pt = e.at("point").get<std::string>();
    const int m = e.at("mult").get<int>();
    d.add(pt == "inf" ? Point::infinity() : Point(field.element(field.parse(pt))), m);
  }
  return d;
}

}  // namespace ramify::cli
