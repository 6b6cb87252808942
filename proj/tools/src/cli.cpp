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

#include "ramify_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "ramify/cartier.hpp"
#include "ramify/census.hpp"
#include "ramify/deform.hpp"
#include "ramify/error.hpp"
#include "ramify/family.hpp"
#include "ramify_cli/json_io.hpp"

namespace ramify::cli {

namespace {

struct Common {
  std::uint32_t p = 0;
  std::uint32_t ext = 1;
  int max_ext = 2;
  bool json = false;
  std::string out;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Result {
  json data;
  std::string human;
};

void add_common(CLI::App* s, Common& c) {
  s->add_option("--p", c.p, "Field characteristic (prime)")->required();
  s->add_option("--ext", c.ext, "Extension degree m, working over F_{p^m}")->capture_default_str();
  s->add_option("--max-ext", c.max_ext, "Largest extension degree searched for roots")->capture_default_str();
  s->add_flag("--json", c.json, "Emit JSON");
  s->add_option("--out", c.out, "Write output to FILE instead of stdout");
  s->add_option("--seed", c.seed, "Seed for sampled parameters")->capture_default_str();
  s->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
}

FieldSpec field_of(const Common& c) {
  if (c.max_ext < 1 || c.max_ext > static_cast<int>(kMaxExtensionDegree)) {
    throw ValidationError("--max-ext must lie in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  }
  if (c.threads < 1 || c.threads > 256) throw ValidationError("--threads must lie in [1, 256]");
  return FieldSpec::make(c.p, c.ext);
}

std::string lengths_table(const json& divisor) {
  std::ostringstream os;
  os << "point        length\n";
  for (const auto& e : divisor) {
    os << std::left << std::setw(12) << e["point"].get<std::string>() << " " << e["mult"].get<int>() << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ disc

Result cmd_disc(const Common& c, const std::string& text) {
  const FieldSpec f = field_of(c);
  const Cover cov = Cover::parse(f, text);
  const LengthsResult lr = differential_lengths_partial(cov, c.max_ext);
  json j = {{"cover", cov.to_string()},
            {"field", f.name()},
            {"disc", discriminant(cov).to_string()},
            {"raw_discriminant", raw_discriminant(cov).to_string()},
            {"length_at_infinity", length_at_infinity(cov)},
            {"lengths", to_json(lr.divisor)},
            {"split", lr.split()},
            {"residual", lr.residual.to_string()}};
  std::string h = j["disc"].get<std::string>() + "\n" + lengths_table(j["lengths"]);
  if (!lr.split()) h += "unsplit factor: " + j["residual"].get<std::string>() + "\n";
  return {j, h};
}

// ------------------------------------------------------------------ lengths

Result cmd_lengths(const Common& c, const std::string& text) {
  const FieldSpec f = field_of(c);
  const Cover cov = Cover::parse(f, text);
  const Divisor d = differential_lengths(cov, c.max_ext);
  json ram = json::array();
  std::ostringstream os;
  os << "point        length  e  wild\n";
  for (const auto& [pt, l] : d.entries()) {
    const RamificationIndex e = ram_index(cov, pt);
    ram.push_back({{"point", pt.to_string()}, {"length", l}, {"e", e.e}, {"wild", e.wild}});
    os << std::left << std::setw(12) << pt.to_string() << " " << std::setw(7) << l << " " << std::setw(2) << e.e
       << " " << (e.wild ? "yes" : "no") << "\n";
  }
  json j = {{"cover", cov.to_string()},      {"field", f.name()},          {"lengths", to_json(d)},
            {"multiset", d.multiset()},      {"total", d.total()},         {"expected_total", 2 * cov.degree() - 2},
            {"ramification", ram}};
  os << "total " << d.total() << " (2d-2 = " << 2 * cov.degree() - 2 << ")\n";
  return {j, os.str()};
}

// ------------------------------------------------------------------ equiv

Result cmd_equiv(const Common& c, const std::string& a, const std::string& b) {
  const FieldSpec f = field_of(c);
  const Cover x = Cover::parse(f, a);
  const Cover y = Cover::parse(f, b);
  const auto w = equivalent(x, y);
  json j = {{"first", x.to_string()}, {"second", y.to_string()}, {"field", f.name()}, {"equivalent", w.has_value()}};
  j["witness"] = w ? json(w->to_string('y')) : json(nullptr);
  std::string h = w ? "equivalent, witness " + w->to_string('y') + "\n" : std::string("not equivalent\n");
  return {j, h};
}

// ------------------------------------------------------------------ normalize

Result cmd_normalize(const Common& c, const std::string& text) {
  const FieldSpec f = field_of(c);
  const NormalizedCover n = normalize(Cover::parse(f, text), c.max_ext);
  json j = to_json(n);
  std::string h = "cover  " + n.cover.to_string() + "\nsource " + n.source_change.to_string('x') + "\ntarget " +
                  n.target_change.to_string('y') + "\nfield  " + n.cover.field().name() + "\n";
  return {j, h};
}

// ------------------------------------------------------------------ cartier

Result cmd_cartier(const Common& c, const std::string& text, const std::string& compare) {
  const FieldSpec f = field_of(c);
  const Poly poly = Poly::parse(f, text);
  const OperatorMatrix m = operator_matrix(poly);
  const Subspace ker = kernel_T(poly);
  const Subspace im = image_T(poly);
  json matrix = json::array();
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t k = 0; k < m.matrix.cols(); ++k) row.push_back(m.matrix.at(r, k).to_string('X'));
    matrix.push_back(row);
  }
  json kb = json::array();
  for (const auto& v : ker.basis) kb.push_back(to_json(v));
  json ib = json::array();
  for (const auto& v : im.basis) ib.push_back(to_json(v));
  json j = {{"f", poly.to_string()}, {"field", f.name()},    {"matrix", matrix}, {"kernel_dim", ker.dim},
            {"kernel", kb},          {"image_dim", im.dim}, {"image", ib}};
  std::ostringstream os;
  os << "T_f for f = " << poly << " (X = x^" << f.characteristic() << ")\n" << m.matrix.to_string('X') << "\n";
  os << "kernel dim " << ker.dim << "\n";
  for (const auto& v : ker.basis) os << "  " << to_json(v).dump() << "\n";
  os << "image dim " << im.dim << "\n";
  for (const auto& v : im.basis) os << "  " << to_json(v).dump() << "\n";
  if (!compare.empty()) {
    const Poly g = Poly::parse(f, compare);
    const bool same = image_equal(poly, g);
    j["compare"] = {{"g", g.to_string()}, {"image_equal", same}};
    os << "image equal to that of " << g << ": " << (same ? "yes" : "no") << "\n";
  }
  return {j, os.str()};
}

// ------------------------------------------------------------------ tangent

struct TangentArgs {
  std::string cover;
  std::string variant = "xd";
  int order = 1;
  bool oracle = false;
  bool shape = false;
  std::uint64_t bound = kDefaultBruteForceBound;
};

json fraction_json(const Fraction& fr) { return {{"num", fr.num.to_string('X')}, {"den", fr.den.to_string('X')}}; }

Result cmd_tangent(const Common& c, const TangentArgs& a) {
  const FieldSpec f = field_of(c);
  const Variant variant = parse_variant(a.variant);
  if (a.order < 1 || a.order > 8) throw ValidationError("--order must lie in [1, 8]");
  if (a.order > 1 && variant != Variant::kXD) throw ValidationError("--order > 1 needs --variant xd");
  const NormalizedCover n = normalize(Cover::parse(f, a.cover), c.max_ext);
  const TangentSpace ts = tangent_space(n, variant, c.max_ext);
  const FieldSpec sf = ts.system.field();
  json basis = json::array();
  for (const auto& v : ts.basis) basis.push_back(to_json(v, sf));
  json j = {{"variant", to_string(variant)},
            {"field", sf.name()},
            {"normalization", to_json(n)},
            {"unknowns", ts.system.unknowns()},
            {"dim", ts.dim},
            {"basis", basis}};
  std::ostringstream os;
  os << "normalized " << n.cover << "  (source " << n.source_change.to_string('x') << ", target "
     << n.target_change.to_string('y') << ")\n";
  os << "variant " << to_string(variant) << " over " << sf.name() << ", " << ts.system.unknowns() << " unknowns\n";
  os << "dim " << ts.dim << "\n";
  for (const auto& v : ts.basis) {
    os << "  g1 = " << v.g1 << ", h1 = " << v.h1;
    if (!v.eps.empty()) os << ", eps = " << to_json(v, sf)["eps"].dump();
    os << "\n";
  }
  if (variant == Variant::kXli) {
    json pts = json::array();
    for (std::size_t i = 0; i < ts.system.branch_points.size(); ++i) {
      pts.push_back({{"point", ts.system.branch_points[i].to_string()},
                     {"length", ts.system.lengths[i]},
                     {"degenerate", static_cast<bool>(ts.system.degenerate[i])}});
      if (ts.system.degenerate[i]) {
        os << "  eps column at " << ts.system.branch_points[i] << " vanishes (p | l = " << ts.system.lengths[i]
           << ")\n";
      }
    }
    j["branch_points"] = pts;
  }
  if (a.order > 1) {
    json lifts = json::array();
    json first = nullptr;
    for (std::size_t i = 0; i < ts.basis.size(); ++i) {
      const LiftResult lr = lift_deformation(n, ts.basis[i], a.order);
      json entry = {{"success", lr.success}, {"order", lr.order}};
      entry["obstructed_at"] = lr.obstructed_at ? json(*lr.obstructed_at) : json(nullptr);
      if (lr.obstructed_at) {
        entry["residual"] = lr.residual.to_string();
        if (first.is_null()) first = *lr.obstructed_at;
      }
      json corr = json::array();
      for (const auto& [g, h] : lr.corrections) corr.push_back({{"g", g.to_string()}, {"h", h.to_string()}});
      entry["corrections"] = corr;
      lifts.push_back(entry);
      os << "  lift of basis vector " << i << " to order " << a.order << ": "
         << (lr.success ? "succeeds" : "obstructed at t^" + std::to_string(*lr.obstructed_at)) << "\n";
    }
    j["lifts"] = lifts;
    j["obstructed_at"] = first;
  }
  if (a.oracle) {
    const BruteForceResult bf = brute_force_tangent(n, variant, c.max_ext, a.bound, c.threads);
    j["oracle"] = {{"dim", bf.dim}, {"solutions", bf.solutions}, {"searched", bf.searched}};
    j["oracle_agrees"] = bf.dim == ts.dim;
    os << "oracle: " << bf.solutions << " of " << bf.searched << " tuples, dim " << bf.dim << ", "
       << (bf.dim == ts.dim ? "agrees" : "DISAGREES") << "\n";
  }
  if (a.shape) {
    json shapes = json::array();
    for (const auto& v : ts.basis) {
      const auto w = solve_shape(n, v);
      if (!w) {
        shapes.push_back(nullptr);
        os << "  shape: none\n";
        continue;
      }
      shapes.push_back(
          {{"alpha", fraction_json(w->alpha)}, {"beta", fraction_json(w->beta)}, {"gamma", fraction_json(w->gamma)}});
      os << "  shape: alpha = (" << w->alpha.num.to_string('X') << ")/(" << w->alpha.den.to_string('X')
         << "), beta = (" << w->beta.num.to_string('X') << ")/(" << w->beta.den.to_string('X') << "), gamma = ("
         << w->gamma.num.to_string('X') << ")/(" << w->gamma.den.to_string('X') << ")\n";
    }
    j["shape"] = shapes;
  }
  return {j, os.str()};
}

// ------------------------------------------------------------------ family

struct FamilyArgs {
  std::string kind;
  std::string cover;
  bool verify_set = false;
  std::size_t samples = 0;
  std::uint32_t sample_ext = 1;
  bool direction = false;
};

Result cmd_family(const Common& c, const FamilyArgs& a) {
  const FieldSpec f = field_of(c);
  if (a.sample_ext < 1 || a.sample_ext > kMaxExtensionDegree) throw ValidationError("--sample-ext out of range");
  std::unique_ptr<Family> fam;
  if (a.kind == "wild") {
    if (a.cover.empty()) throw ValidationError("family wild needs a cover");
    fam = std::make_unique<Family>(wild_family(Cover::parse(f, a.cover), c.max_ext));
  } else if (a.kind == "osserman") {
    if (c.ext != 1) throw ValidationError("family osserman lives over F_p; use --sample-ext for samples");
    fam = std::make_unique<Family>(osserman_family(c.p));
  } else if (a.kind == "power") {
    if (c.ext != 1) throw ValidationError("family power lives over F_p; use --sample-ext for samples");
    fam = std::make_unique<Family>(power_family(c.p));
  } else {
    throw ValidationError("unknown family \"" + a.kind + "\" (expected wild, osserman or power)");
  }
  json j = {{"kind", a.kind},
            {"family", fam->description},
            {"param_field", fam->param_field.name()},
            {"degree", fam->degree},
            {"origin", fam->origin.to_string()},
            {"source_change", fam->source_change.to_string('x')},
            {"target_change", fam->target_change.to_string('y')}};
  if (const auto bad = fam->degenerate_parameter()) j["degenerate_parameter"] = bad->to_string();
  std::ostringstream os;
  os << "f_t = " << fam->description << "  over " << fam->param_field.name() << "\n";
  if (a.kind == "wild") {
    os << "coordinates: source " << fam->source_change.to_string('x') << ", target "
       << fam->target_change.to_string('y') << "\n";
  }
  if (a.direction) {
    const FamilyDirection dir = family_direction(*fam, c.max_ext);
    j["direction"] = {{"normalization", to_json(dir.base)},
                      {"g1", dir.tangent.g1.to_string()},
                      {"h1", dir.tangent.h1.to_string()}};
    os << "d/dt at t = 0 in chart " << dir.base.cover << ": g1 = " << dir.tangent.g1 << ", h1 = " << dir.tangent.h1
       << "\n";
  }
  if (a.verify_set) {
    const FieldSpec sf = FieldSpec::make(fam->param_field.characteristic(),
                                         fam->param_field.degree() * a.sample_ext);
    const auto ts = sample_parameters(sf, a.samples, c.seed);
    const FamilyReport rep = verify_family(*fam, ts, c.max_ext, c.threads);
    j["sample_field"] = sf.name();
    j["seed"] = c.seed;
    j["report"] = to_json(rep);
    os << "samples from " << sf.name() << ": " << ts.size() << "\n";
    os << "t            disc";
    for (const auto& p : rep.support) os << "  e@" << p.to_string();
    os << "\n";
    for (const auto& fib : rep.fibers) {
      os << std::left << std::setw(12) << fib.t.to_string() << " " << fib.disc;
      for (const auto& e : fib.ram) os << "  " << e.e << (e.wild ? "w" : "");
      os << "\n";
    }
    for (const auto& t : rep.skipped) os << "skipped t = " << t.to_string() << " (fiber loses degree)\n";
    os << "disc_constant " << (rep.disc_constant ? "yes" : "no") << "\n";
    os << "length_divisor_constant " << (rep.length_divisor_constant ? "yes" : "no") << "\n";
    os << "pairwise_inequivalent " << (rep.pairwise_inequivalent ? "yes" : "no") << "\n";
  }
  return {j, os.str()};
}

// ------------------------------------------------------------------ census

struct CensusArgs {
  int d = 2;
  std::uint64_t budget = kDefaultCensusBudget;
  bool xli = false;
};

Result cmd_census(const Common& c, const CensusArgs& a) {
  const FieldSpec f = field_of(c);
  if (a.d < 1 || a.d > 8) throw ValidationError("--d must lie in [1, 8]");
  CensusOptions opts;
  opts.max_ext = c.max_ext;
  opts.budget = a.budget;
  opts.threads = c.threads;
  opts.xli = a.xli;
  const Census cen = census_by_disc(f, a.d, opts);
  const std::uint32_t p = f.characteristic();
  json records = json::array();
  std::uint64_t violations = 0;
  std::uint64_t tame = 0;
  for (const auto& r : cen.records) {
    records.push_back(to_json(r));
    if (!r.tame_lengths(p)) continue;
    tame += r.class_count;
    for (auto [dim, n] : r.tangent_dims) {
      if (dim > 0) violations += n;
    }
  }
  json summary = {{"field", f.name()},
                  {"d", a.d},
                  {"planes_searched", cen.planes_searched},
                  {"records", cen.records.size()},
                  {"total_classes", cen.total_classes},
                  {"tame_classes", tame},
                  {"classes_up_to_galois", cen.classes_up_to_galois}};
  // The zero-dimension statement is only claimed in characteristic 2 and 3.
  summary["violations"] = (p == 2 || p == 3) ? json(violations) : json(nullptr);
  json j = {{"records", records}, {"summary", summary}};
  std::ostringstream os;
  os << "census over " << f.name() << ", d = " << a.d << ": " << cen.planes_searched << " planes, "
     << cen.records.size() << " discriminants, " << cen.total_classes << " classes\n";
  for (const auto& r : cen.records) {
    os << "  " << std::left << std::setw(28) << r.disc.to_string() << " lengths " << json(r.length_multiset).dump()
       << "  classes " << r.class_count << "  dims " << to_json(r)["tangent_dims"].dump() << (r.wild ? "  wild" : "")
       << (r.split() ? "" : "  unsplit") << "\n";
  }
  os << "classes up to Galois " << cen.classes_up_to_galois << "\n";
  os << "violations " << summary["violations"].dump() << "\n";
  return {j, os.str()};
}

void emit(const Common& c, const Result& r, std::ostream& out) {
  const std::string text = c.json ? r.data.dump(2) + "\n" : r.human;
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw ComputationError("cannot open " + c.out + " for writing");
  file << text;
  if (!file) throw ComputationError("failed writing " + c.out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discriminants, differential lengths and deformations of rational covers over finite fields",
               "ramify"};
  app.require_subcommand(1);
  Common common;
  std::string cover;
  std::string second;
  std::string compare;
  TangentArgs targs;
  FamilyArgs fargs;
  CensusArgs cargs;

  auto* disc = app.add_subcommand("disc", "Monic discriminant and differential lengths");
  disc->add_option("cover", cover, "Cover \"g / h\"")->required();
  auto* lengths = app.add_subcommand("lengths", "Differential length divisor and ramification indices");
  lengths->add_option("cover", cover, "Cover \"g / h\"")->required();
  auto* equiv = app.add_subcommand("equiv", "Equivalence of two covers up to a target Mobius map");
  equiv->add_option("first", cover, "Cover")->required();
  equiv->add_option("second", second, "Cover")->required();
  auto* norm = app.add_subcommand("normalize", "Move a cover into the affine chart");
  norm->add_option("cover", cover, "Cover \"g / h\"")->required();
  auto* cart = app.add_subcommand("cartier", "Operator T_f(q) = q f' - f q' over k(x^p)");
  cart->add_option("f", cover, "Polynomial f")->required();
  cart->add_option("--compare", compare, "Compare the image with that of g");
  auto* tan = app.add_subcommand("tangent", "Tangent space of X_D or X_(l_i) at a cover");
  tan->add_option("cover", targs.cover, "Cover \"g / h\"")->required();
  tan->add_option("--variant", targs.variant, "xd or xli")->capture_default_str();
  tan->add_option("--order", targs.order, "Lift basis vectors modulo t^N")->capture_default_str();
  tan->add_flag("--oracle", targs.oracle, "Cross-check by exhaustive search");
  tan->add_option("--bound", targs.bound, "Search-space bound for --oracle")->capture_default_str();
  tan->add_flag("--shape", targs.shape, "Solve for alpha, beta, gamma in k(x^p)");
  auto* fam = app.add_subcommand("family", "Explicit one-parameter families with constant discriminant");
  fam->add_option("kind", fargs.kind, "wild | osserman | power")->required();
  fam->add_option("cover", fargs.cover, "Cover (for wild)");
  auto* verify = fam->add_option("--verify", fargs.samples, "Verify on N sampled parameters (0 = all)");
  fam->add_option("--sample-ext", fargs.sample_ext, "Samples from the degree-E extension of the parameter field")
      ->capture_default_str();
  fam->add_flag("--direction", fargs.direction, "Print d/dt at t = 0 in the normalized chart");
  auto* cen = app.add_subcommand("census", "Exhaustive census of degree-d covers grouped by discriminant");
  cen->add_option("--d", cargs.d, "Degree")->capture_default_str();
  cen->add_option("--budget", cargs.budget, "Maximum number of planes")->capture_default_str();
  cen->add_flag("--xli", cargs.xli, "Also compute X_(l_i) tangent dimensions");

  for (auto* s : {disc, lengths, equiv, norm, cart, tan, fam, cen}) add_common(s, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    Result r;
    if (app.got_subcommand(disc)) r = cmd_disc(common, cover);
    if (app.got_subcommand(lengths)) r = cmd_lengths(common, cover);
    if (app.got_subcommand(equiv)) r = cmd_equiv(common, cover, second);
    if (app.got_subcommand(norm)) r = cmd_normalize(common, cover);
    if (app.got_subcommand(cart)) r = cmd_cartier(common, cover, compare);
    if (app.got_subcommand(tan)) r = cmd_tangent(common, targs);
    if (app.got_subcommand(fam)) {
      fargs.verify_set = verify->count() > 0;
      r = cmd_family(common, fargs);
    }
    if (app.got_subcommand(cen)) r = cmd_census(common, cargs);
    emit(common, r, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace ramify::cli
