#include "picard/report.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "picard/congruence.hpp"
#include "picard/errors.hpp"
#include "picard/field.hpp"
#include "picard/ford.hpp"
#include "picard/heisenberg.hpp"
#include "picard/mirror.hpp"
#include "picard/presentation.hpp"
#include "picard/torsion.hpp"
#include "picard/words.hpp"

namespace picard {

namespace {

Json rows(const Mat3& m) {
  Json out = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json r = Json::array();
    for (int j = 0; j < 3; ++j) r.push_back(to_string(m(i, j)));
    out.push_back(r);
  }
  return out;
}

Json vec(const Vec3O& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

Json heis(const HeisPt& p) { return {{"z", to_string(p.z)}, {"s", to_string(p.s)}}; }

Json cusp(const CuspElt& c) {
  return {{"word", c.word()}, {"m", c.m}, {"n", c.n}, {"eps", c.eps}, {"l", c.l}};
}

Json optional_int(const std::optional<std::int64_t>& x) { return x ? Json(*x) : Json(nullptr); }

Json group_json(const FiniteGroup& g) {
  Json refl = Json::array();
  for (const auto& r : g.reflections) {
    refl.push_back({{"matrix", rows(r.elt.matrix())}, {"polar", to_json(r.polar)}, {"polar_norm", r.polar_norm}});
  }
  return {{"projective_order", g.projective_order()},
          {"linear_order", g.linear_order},
          {"one_lines", g.one_lines},
          {"two_lines", g.two_lines},
          {"one_line_orbits", g.one_line_orbits},
          {"two_line_orbits", g.two_line_orbits},
          {"reflections", refl}};
}

Json facets(const PrismMembership& m) {
  Json out = Json::array();
  for (auto f : m.facets) out.push_back(to_string(f));
  return out;
}

Json class_json(const TorsionClass& c, const std::optional<ClassMatch>& match) {
  Json j = {{"word", c.rep.word()},
            {"matrix", rows(c.rep.matrix())},
            {"order", c.proj_order},
            {"kind", c.reflection ? "reflection" : "isolated"}};
  j[c.reflection ? "polar" : "fixed_point"] = to_json(c.locus);
  j[c.reflection ? "polar_norm" : "fixed_point_norm"] = optional_int(c.norm);
  if (!c.reflection) {
    j["domain_point"] = c.domain_point ? to_json(*c.domain_point) : Json(nullptr);
    j["stab_order"] = c.stab_order ? Json(*c.stab_order) : Json(nullptr);
    j["linear_stab_order"] = c.linear_stab_order;
    j["one_lines"] = c.one_lines;
    j["two_lines"] = c.two_lines;
    j["one_line_orbits"] = c.one_line_orbits;
    j["two_line_orbits"] = c.two_line_orbits;
    j["component"] = c.component;
  }
  if (match) {
    j["table"] = match->row->table;
    j["row"] = match->row->row;
    j["table_word"] = match->row->word;
    j["conjugator"] = rows(match->witness.conjugator.matrix());
    j["power"] = match->witness.power;
  } else {
    j["table"] = nullptr;
  }
  return j;
}

const TorsionSummary& torsion_for(const Config& cfg) {
  static std::map<std::pair<std::size_t, int>, TorsionSummary> cache;
  auto key = std::pair{cfg.closure_cap, cfg.word_search_len};
  auto it = cache.find(key);
  if (it == cache.end()) {
    EnumerationOptions opts;
    opts.closure_cap = cfg.closure_cap;
    opts.word_search_len = cfg.word_search_len;
    it = cache.emplace(key, enumerate_torsion(opts)).first;
  }
  return it->second;
}

Json generators_json() {
  Json out = Json::array();
  for (const auto& g : generator_table()) {
    const Mat3& m = g.elt.matrix();
    out.push_back({{"name", g.name},
                   {"matrix", rows(m)},
                   {"unitary", m.is_unitary()},
                   {"depth", depth(to_k(m.column(0)))},
                   {"inverse", generator_table()[g.inverse].name}});
  }
  return out;
}

}  // namespace

void Config::validate() const {
  if (max_reduce_iters <= 0 || precision_bits <= 0 || closure_cap == 0 || word_search_len <= 0 || height_bound <= 0) {
    throw InvalidArgument("configuration values must be positive");
  }
  if (precision_bits > 4096) throw InvalidArgument("precision_bits is capped at 4096");
}

void Config::install() const {
  validate();
  PrecisionPolicy p = precision_policy();
  p.start_bits = precision_bits;
  p.max_bits = std::max(p.max_bits, precision_bits);
  set_precision_policy(p);
}

Json to_json(const CheckList& checks) {
  Json arr = Json::array();
  for (const auto& c : checks.checks) {
    Json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return {{"passed", checks.all_passed()}, {"checks", arr}};
}

Json to_json(const GroupElt& g) { return {{"word", g.word()}, {"matrix", rows(g.matrix())}}; }

Json to_json(const Mat3& m) { return rows(m); }

Json to_json(const ProjPoint& p) {
  if (p.is_rational()) return vec(p.rational());
  return {{"field", p.field()->describe()}, {"coords", to_string(p.coords())}};
}

Vec3K parse_point(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']' && c != '"' && c != ' ') s += c;
  }
  return to_k(parse_vector(s));
}

Json ford_reduce_report(const Vec3K& point, const Config& cfg) {
  if (ProjPoint(point).norm_sign() >= 0) throw InvalidArgument("point must be negative");
  DomainReduction r = reduce_to_domain(to_f(point), cfg.max_reduce_iters);
  ProjPoint out(r.point);
  Json hits = Json::array();
  for (const auto& h : spheres_containing(r.point)) hits.push_back({{"sphere", h.sphere->label()}, {"side", to_string(h.side)}});
  return {{"input", to_string(point)},
          {"element", rows(r.elt.matrix())},
          {"identity", r.elt.is_identity()},
          {"point", to_json(out)},
          {"steps", r.steps},
          {"in_omega", in_omega(r.point)},
          {"spheres", hits}};
}

Json ford_spheres_report() {
  Json out = Json::array();
  for (const auto& s : sphere_catalog()) {
    Json aliases = Json::array();
    for (const auto& [a, j] : s.aliases) aliases.push_back(a.word() + " A" + std::to_string(j + 1));
    out.push_back({{"label", s.label()},
                   {"center", heis(s.sphere.center)},
                   {"depth", s.sphere.a31norm},
                   {"r4", to_string(s.sphere.r4)},
                   {"column", vec(s.column)},
                   {"aliases", aliases}});
  }
  return {{"generators", generators_json()}, {"count", out.size()}, {"spheres", out}};
}

Json cusp_overlaps_report() {
  Json out = Json::array();
  Json torsion = Json::array();
  for (const auto& o : enumerate_cusp_overlaps()) {
    GroupElt g = o.elt.to_group();
    auto ord = projective_order(g);
    Json w = Json::array();
    for (const auto& x : o.witness) w.push_back(to_string(x));
    out.push_back({{"element", cusp(o.elt)}, {"witness", w}, {"order", ord ? Json(*ord) : Json(nullptr)}});
    if (ord && *ord > 1) torsion.push_back({{"element", cusp(o.elt)}, {"order", *ord}});
  }
  return {{"count", out.size()}, {"overlaps", out}, {"torsion", torsion}};
}

Json cusp_torsion_report() {
  Json fams = Json::array();
  for (const auto& f : cusp_torsion_classes()) {
    Json j = {{"family", f.family}, {"w", to_string(f.w)}, {"base_s", to_string(f.base_s)}, {"has_torsion", f.has_torsion}};
    if (f.has_torsion) {
      j["k"] = f.k;
      j["element"] = rows(f.element.matrix());
    }
    fams.push_back(j);
  }
  Json elems = cusp_overlaps_report()["torsion"];
  return {{"count", elems.size()}, {"elements", elems}, {"families", fams}};
}

Json torsion_enumerate_report(const Config& cfg) {
  const TorsionSummary& s = torsion_for(cfg);
  auto matches = match_class_rows(s.classes);
  Json refl = Json::array(), iso = Json::array();
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    (s.classes[i].reflection ? refl : iso).push_back(class_json(s.classes[i], matches[i]));
  }
  Json comps = Json::array();
  auto components = s.graph.components();
  for (const auto& c : components) {
    int root = c.front();
    comps.push_back({{"vertices", c.size()}, {"root", to_json(s.graph.vertices[root].point)}, {"loops", s.graph.loops(root)}});
  }
  Json counts = Json::object();
  for (int n : {2, 3, 4, 6, 7}) {
    counts[std::to_string(n)] = std::count_if(s.classes.begin(), s.classes.end(), [n](const TorsionClass& c) {
      return !c.reflection && c.proj_order == n;
    });
  }
  return {{"candidates", s.candidates},
          {"reflection_classes", refl},
          {"isolated_classes", iso},
          {"isolated_counts", counts},
          {"graph", {{"vertices", s.graph.vertices.size()}, {"edges", s.graph.edges.size()}, {"components", comps}}}};
}

Json torsion_stabilizer_report(const Vec3K& point, const Config& cfg) {
  ProjPoint p(point);
  if (p.norm_sign() >= 0) throw InvalidArgument("point must be negative");
  DomainReduction r = reduce_to_domain(p.coords(), cfg.max_reduce_iters);
  FiniteGroup g = stabilizer(p, cfg.closure_cap);
  HoroAlg h = horo_coords(r.point);
  Json hits = Json::array();
  for (const auto& x : spheres_containing(r.point)) hits.push_back({{"sphere", x.sphere->label()}, {"side", to_string(x.side)}});
  Json j = {{"point", to_json(p)}, {"domain_point", to_json(ProjPoint(r.point))}, {"prism_sides", facets(prism_membership(HeisAlg{h.z, h.s}))}, {"spheres", hits}};
  j["stabilizer"] = group_json(g);
  return j;
}

Json mirror_verify_report(const std::string& which, const Config& cfg) {
  if (which == "R") {
    MirrorRReport r = verify_mirror_R();
    Json pts = Json::array();
    for (const auto& sp : r.points) {
      pts.push_back({{"element", sp.element},
                     {"point", to_json(sp.point)},
                     {"one_lines", sp.one_lines},
                     {"two_lines", sp.two_lines},
                     {"stab_order", sp.stab_order}});
    }
    return {{"mirror", "R"}, {"report", to_json(r.checks)}, {"special_points", pts}};
  }
  if (which == "L") {
    MirrorLReport r = verify_mirror_L(cfg.height_bound);
    Json orders = Json::object();
    for (const auto& [k, v] : r.orders_on_mirror) orders[k] = v ? Json(*v) : Json(nullptr);
    Json polars = Json::array();
    for (const auto& v : r.found_polars) polars.push_back({{"vector", vec(v)}, {"norm", square_norm(v)}});
    return {{"mirror", "L"},
            {"report", to_json(r.checks)},
            {"orders_on_mirror", orders},
            {"passing_permutations", r.passing_permutations},
            {"trivial_words", r.trivial_words},
            {"found_polars", polars}};
  }
  throw InvalidArgument("mirror must be R or L");
}

Json mirror_search_report(const std::string& which, std::int64_t norm, std::int64_t height) {
  MirrorContext ctx = which == "L" ? MirrorContext::of_L() : which == "R" ? MirrorContext::of_R()
                                                                          : throw InvalidArgument("mirror must be R or L");
  if (norm != 1 && norm != 2) throw InvalidArgument("norm must be 1 or 2");
  Json out = Json::array();
  for (const auto& v : search_orthogonal_mirrors(ctx, norm, height)) out.push_back(vec(v));
  return {{"mirror", which}, {"norm", norm}, {"height", height}, {"count", out.size()}, {"vectors", out}};
}

Json presentation_report(const Config& cfg) {
  auto [a, b] = ab_linear();
  Json rows_json = Json::array();
  bool all_rows = true;
  for (const auto& r : verify_rows()) {
    all_rows = all_rows && r.checks.all_passed();
    rows_json.push_back({{"table", r.row->table},
                         {"row", r.row->row},
                         {"order", r.row->order},
                         {"word", r.row->word},
                         {"other", r.row->other},
                         {"checks", to_json(r.checks)},
                         {"aliases", to_json(r.alias_checks)}});
  }
  const TorsionSummary& s = torsion_for(cfg);
  Json cov = Json::array();
  bool all_cov = true;
  for (const auto& c : torsion_coverage(s.classes)) {
    all_cov = all_cov && c.found;
    Json j = {{"class", s.classes[c.class_index].rep.word()}, {"found", c.found}};
    if (c.found) {
      j["table"] = c.row->table;
      j["row"] = c.row->row;
      j["power"] = c.power;
      j["conjugator"] = rows(c.conjugator.matrix());
    }
    cov.push_back(j);
  }
  Json catalog = Json::array();
  for (const auto& r : verify_class_rows()) {
    catalog.push_back({{"table", r.row->table}, {"row", r.row->row}, {"word", r.row->word}, {"checks", to_json(r.checks)}});
  }
  return {{"a", rows(a)},
          {"b", rows(b)},
          {"b_equals_TtR", GroupElt(b) == eval_group("Tt R")},
          {"relators", to_json(verify_relators())},
          {"rows_passed", all_rows},
          {"rows", rows_json},
          {"coverage_complete", all_cov},
          {"coverage", cov},
          {"reflection_identities", to_json(verify_reflection_identities())},
          {"class_catalog", catalog}};
}

Json congruence_report(const std::string& ideal, const Config& cfg) {
  ResidueMap r = ResidueMap::by_name(ideal);
  const TorsionSummary& s = torsion_for(cfg);
  Certificate c = torsion_free_certificate(r, s.classes);
  auto [a, b] = ab_linear();
  Json classes = Json::array();
  for (const auto& ci : c.classes) {
    classes.push_back({{"word", ci.word},
                       {"order", ci.proj_order},
                       {"image_order", ci.image_proj_order},
                       {"linear_image_orders", {ci.image_order, ci.image_order_neg}},
                       {"passed", ci.passed}});
  }
  return {{"ideal", r.name},
          {"p", r.p},
          {"tau_image", r.tau_image},
          {"phi_a", fp_to_string(reduce_mod(a, r), r.p)},
          {"phi_b", fp_to_string(reduce_mod(b, r), r.p)},
          {"order", c.image.order()},
          {"projective_order", c.image.projective_order()},
          {"center_order", c.image.center.size()},
          {"torsion_free", c.torsion_free},
          {"torsion_free_at_infinity", c.torsion_free_at_infinity},
          {"tv_image_order", c.tv_order},
          {"classes", classes},
          {"cusp", to_json(c.cusp)}};
}

Json depth_report(std::int64_t max_depth) {
  Json gens = Json::object();
  for (const auto& g : generator_table()) gens[g.name] = depth(to_k(g.elt.matrix().column(0)));
  Json real = Json::array(), witnesses = Json::object();
  for (std::int64_t d = 1; d <= max_depth; ++d) {
    if (auto v = null_vector_of_depth(d)) {
      real.push_back(d);
      witnesses[std::to_string(d)] = vec(*v);
    }
  }
  return {{"generator_depths", gens}, {"realizable", real}, {"witnesses", witnesses}};
}

Json full_report(const Config& cfg) {
  cfg.install();
  StabilizerExamples ex = verify_stabilizer_examples(cfg.closure_cap);
  return {{"config",
           {{"max_reduce_iters", cfg.max_reduce_iters},
            {"precision_bits", cfg.precision_bits},
            {"closure_cap", cfg.closure_cap},
            {"word_search_len", cfg.word_search_len},
            {"height_bound", cfg.height_bound}}},
          {"ford", ford_spheres_report()},
          {"depths", depth_report(16)},
          {"cusp_torsion", cusp_torsion_report()},
          {"torsion", torsion_enumerate_report(cfg)},
          {"stabilizer_examples", {{"checks", to_json(ex.checks)}, {"printed_claims", to_json(ex.printed_claims)}}},
          {"mirror_R", mirror_verify_report("R", cfg)},
          {"mirror_L", mirror_verify_report("L", cfg)},
          {"presentation", presentation_report(cfg)},
          {"congruence", {congruence_report("isqrt7", cfg), congruence_report("tau", cfg)}}};
}

}  // namespace picard
