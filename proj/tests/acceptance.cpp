// Acceptance run: one PASS/FAIL line per criterion, failing checks listed
// underneath. With --criterion N only that criterion runs.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "picard/checks.hpp"
#include "picard/congruence.hpp"
#include "picard/ford.hpp"
#include "picard/heisenberg.hpp"
#include "picard/hermitian.hpp"
#include "picard/mirror.hpp"
#include "picard/presentation.hpp"
#include "picard/torsion.hpp"
#include "picard/words.hpp"

using namespace picard;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<CheckList()> run;
};

const TorsionSummary& torsion() {
  static const TorsionSummary s = [] {
    EnumerationOptions opts;
    opts.word_search_len = 12;
    return enumerate_torsion(opts);
  }();
  return s;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

template <class T>
std::string show(std::vector<T> xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(std::to_string(x));
  return "(" + join(s) + ")";
}

CheckList generator_table_sanity() {
  CheckList c;
  const auto& gens = generator_table();
  c.add("14 generators", gens.size() == 14, std::to_string(gens.size()));
  for (const auto& g : gens) c.add(g.name + " is unitary", g.elt.matrix().is_unitary());
  const std::vector<std::pair<std::string, std::string>> ids = {
      {"A3", "A2^-1"}, {"A4", "A2^-2"}, {"A5", "A4^-1"}, {"A11", "A10^-1"}, {"A13", "A12^-1"}, {"A14", "A9^-1"}};
  for (const auto& [lhs, rhs] : ids) c.add(lhs + " = " + rhs, eval_group(lhs) == eval_group(rhs));
  return c;
}

CheckList reflection_classes() {
  CheckList c;
  std::vector<std::int64_t> norms;
  for (const auto& cl : torsion().classes) {
    if (cl.reflection) norms.push_back(cl.norm.value_or(0));
  }
  std::sort(norms.begin(), norms.end());
  c.add("two reflection classes with polar norms 1 and 2", norms == std::vector<std::int64_t>{1, 2}, show(norms));
  const auto& ids = reflection_identities();
  CheckList all = verify_reflection_identities();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].printed) c.add("identity " + all.checks[i].name, all.checks[i].passed);
  }
  return c;
}

CheckList isolated_classes() {
  CheckList c;
  const auto& classes = torsion().classes;
  struct Expect {
    int count;
    std::vector<std::optional<std::int64_t>> norms;
    std::vector<std::size_t> stab;
  };
  const std::map<int, Expect> expected = {
      {2, {3, {-1, -2, -2}, {8, 4, 8}}},
      {3, {3, {-3, -3, std::nullopt}, {6, 6, 6}}},
      {4, {2, {-1, -2}, {8, 8}}},
      {6, {1, {std::nullopt}, {6}}},
      {7, {1, {std::nullopt}, {7}}},
  };
  std::size_t isolated = 0;
  for (const auto& [order, e] : expected) {
    std::vector<std::optional<std::int64_t>> norms;
    std::vector<std::size_t> stab;
    for (const auto& cl : classes) {
      if (cl.reflection || cl.proj_order != order) continue;
      norms.push_back(cl.norm);
      stab.push_back(cl.stab_order.value_or(0));
    }
    isolated += norms.size();
    auto want_norms = e.norms;
    auto want_stab = e.stab;
    std::sort(norms.begin(), norms.end());
    std::sort(want_norms.begin(), want_norms.end());
    std::sort(stab.begin(), stab.end());
    std::sort(want_stab.begin(), want_stab.end());
    std::string o = "order " + std::to_string(order);
    c.add(o + ": " + std::to_string(e.count) + " classes", static_cast<int>(stab.size()) == e.count,
          std::to_string(stab.size()));
    c.add(o + ": fixed-point norms", norms == want_norms);
    c.add(o + ": stabilizer orders", stab == want_stab, show(stab));
  }
  std::size_t refl = std::count_if(classes.begin(), classes.end(), [](const TorsionClass& x) { return x.reflection; });
  c.add("no other classes", isolated + refl == classes.size());

  // Line counts and orbit splits against the class catalog.
  auto matches = match_class_rows(classes);
  std::set<const ClassRow*> used;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cl = classes[i];
    if (!matches[i]) {
      c.add(cl.rep.word() + ": matched to a catalog row", false);
      continue;
    }
    const ClassRow& row = *matches[i]->row;
    used.insert(&row);
    std::string name = "row " + std::to_string(row.table) + "." + std::to_string(row.row);
    if (cl.reflection) continue;
    bool lines = cl.one_lines == row.one_lines && cl.two_lines == row.two_lines;
    c.add(name + ": 1-lines and 2-lines", lines,
          std::to_string(cl.one_lines) + " + " + std::to_string(cl.two_lines));
    if (!row.two_line_orbits.empty()) {
      auto orbits = cl.two_line_orbits;
      std::sort(orbits.begin(), orbits.end());
      c.add(name + ": 2-line orbits", orbits == row.two_line_orbits, show(orbits));
    }
  }
  c.add("classes match distinct catalog rows", used.size() == classes.size());
  for (const auto& r : verify_class_rows()) {
    std::string name = "catalog row " + std::to_string(r.row->table) + "." + std::to_string(r.row->row);
    for (const auto& k : r.checks.checks) {
      if (!k.passed) c.add(name + ": " + k.name, false, k.detail);
    }
  }
  return c;
}

CheckList stabilizer_examples() {
  StabilizerExamples ex = verify_stabilizer_examples();
  return ex.checks;
}

CheckList cusp_torsion() {
  CheckList c;
  std::set<GroupElt> want;
  for (const char* w : {"R", "T1 R T1^-1", "Tt R Tt^-1", "Tt R", "T1 Tt R"}) want.insert(eval_group(w));
  c.add("five distinct elements listed", want.size() == 5);
  std::set<GroupElt> got;
  for (const auto& o : enumerate_cusp_overlaps()) {
    GroupElt g = o.elt.to_group();
    auto ord = projective_order(g);
    if (!ord || *ord == 1) continue;
    got.insert(g);
    c.add(o.elt.word() + " has order 2", ord == 2, std::to_string(*ord));
  }
  std::vector<std::string> words;
  for (const auto& g : got) words.push_back(CuspElt::from_matrix(g.matrix()).word());
  c.add("torsion subset equals the listed five", got == want, join(words));
  return c;
}

CheckList mirror_R() { return verify_mirror_R().checks; }

CheckList mirror_L() { return verify_mirror_L(5).checks; }

CheckList presentation() {
  CheckList c;
  for (const auto& k : verify_relators().checks) c.add("relator " + k.name, k.passed, k.detail);
  auto [a, b] = ab_matrices();
  c.add("b = Tt R", b == eval_group("Tt R"));
  for (const auto& r : verify_rows()) {
    std::string name = "row " + std::to_string(r.row->table) + "." + std::to_string(r.row->row);
    for (const auto& k : r.checks.checks) c.add(name + ": " + k.name, k.passed, k.detail);
  }
  const auto& classes = torsion().classes;
  for (const auto& item : torsion_coverage(classes)) {
    const TorsionClass& cl = classes[item.class_index];
    bool ok = item.found;
    if (ok) {
      GroupElt lhs = item.conjugator * cl.rep * item.conjugator.inverse();
      ok = lhs == eval_group(item.row->word).pow(item.power);
    }
    c.add("class " + cl.rep.word() + " conjugate to a table power", ok);
  }
  return c;
}

CheckList congruence() {
  CheckList c;
  Certificate s7 = torsion_free_certificate(ResidueMap::isqrt7(), torsion().classes);
  c.add("image mod isqrt7 has order 336", s7.image.order() == 336, std::to_string(s7.image.order()));
  c.add("image mod isqrt7 has trivial center", s7.image.center.size() == 1, std::to_string(s7.image.center.size()));
  c.add("kernel mod isqrt7 is torsion-free", s7.torsion_free);
  c.add("kernel mod isqrt7 has no torsion at infinity", s7.torsion_free_at_infinity);
  Certificate s2 = torsion_free_certificate(ResidueMap::tau(), torsion().classes);
  c.add("image mod tau has order 168", s2.image.order() == 168, std::to_string(s2.image.order()));
  bool some_fail = std::any_of(s2.classes.begin(), s2.classes.end(), [](const ClassImage& x) { return !x.passed; });
  c.add("certificate mod tau fails on some class", some_fail && !s2.torsion_free);
  return c;
}

// Property suites.

std::mt19937_64 rng(20240611);

Rat rand_rat(int num, int den) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return Rat(n(rng), d(rng));
}

KNum rand_k(int num = 6, int den = 4) {
  Rat a = rand_rat(num, den), b = rand_rat(num, den);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

HeisPt rand_heis() {
  Rat s = rand_rat(8, 4);
  s.canonicalize();
  return {rand_k(), s};
}

HoroCoords rand_horo() {
  std::uniform_int_distribution<int> n(0, 8), d(1, 4);
  Rat u(n(rng), d(rng));
  u.canonicalize();
  HeisPt p = rand_heis();
  return {p.z, p.s, u};
}

HoroCoords translate(const HeisPt& w, const HoroCoords& h) {
  HeisPt p = heis_mul(w, HeisPt{h.z, h.s});
  return {p.z, p.s, h.u};
}

HeisPt rotate(const HeisPt& p) { return {-p.z, p.s}; }

CheckList properties() {
  CheckList c;
  const HeisPt zero{KNum(0), Rat(0)};
  const CuspElt half_turn{0, 0, 1, 0};

  int heis_bad = 0;
  for (int i = 0; i < 300; ++i) {
    HeisPt p = rand_heis(), q = rand_heis(), r = rand_heis();
    if (heis_mul(heis_mul(p, q), r) != heis_mul(p, heis_mul(q, r))) ++heis_bad;
    if (heis_mul(p, heis_inv(p)) != zero || heis_mul(heis_inv(p), p) != zero) ++heis_bad;
    if (heis_mul(zero, p) != p || heis_mul(p, zero) != p) ++heis_bad;
    if (rotate(heis_mul(p, rotate(q))) != heis_mul(rotate(p), q)) ++heis_bad;
    if (half_turn.act(q) != rotate(q)) ++heis_bad;
  }
  c.add("Heisenberg group law axioms", heis_bad == 0, std::to_string(heis_bad) + " failures");

  int cygan_bad = 0;
  for (int i = 0; i < 300; ++i) {
    HoroCoords p = rand_horo(), q = rand_horo();
    HeisPt w = rand_heis();
    Rat d = cygan_dist4(p, q);
    if (cygan_dist4(translate(w, p), translate(w, q)) != d) ++cygan_bad;
    HoroCoords rp{-p.z, p.s, p.u}, rq{-q.z, q.s, q.u};
    if (cygan_dist4(rp, rq) != d) ++cygan_bad;
    if (cygan_dist4(q, p) != d || cygan_dist4(p, p) != 0) ++cygan_bad;
  }
  c.add("Cygan distance is left-invariant", cygan_bad == 0, std::to_string(cygan_bad) + " failures");

  // Exact points on I(g): <x,q_inf> and <x,g q_inf> of equal norm.
  const auto& gens = generator_table();
  int agree_bad = 0, agree_total = 0, boundary_total = 0, inverse_bad = 0;
  for (const auto& gen : gens) {
    const GroupElt& g = gen.elt;
    IsomSphere sphere = IsomSphere::of(g);
    IsomSphere inv_sphere = IsomSphere::of(g.inverse());
    for (int i = 0; i < 40; ++i) {
      HoroCoords h = rand_horo();
      if (h.u == 0) continue;
      Vec3K x = lift(h);
      ++agree_total;
      if (ford_side(to_f(x), g) != sphere_membership(h, sphere)) ++agree_bad;
    }
    Vec3K col = to_k(g.matrix().column(0));
    int made = 0;
    for (int tries = 0; made < 25 && tries < 2000; ++tries) {
      KNum x3 = rand_k(), x2 = rand_k(), w = rand_k();
      if (x3.is_zero() || w.is_zero()) continue;
      KNum target = x3 * w / w.conj();
      KNum x1 = (target - col[0].conj() * x3 - col[1].conj() * x2) / col[2].conj();
      Vec3K x{x1, x2, x3};
      if (ProjPoint(x).norm_sign() >= 0) continue;
      ++made;
      ++boundary_total;
      Vec3F xf = to_f(x);
      if (ford_side(xf, g) != Side::boundary) ++agree_bad;
      if (sphere_membership(horo_coords(x), sphere) != Side::boundary) ++agree_bad;
      Vec3K y = g.inverse().matrix().apply(x);
      if (ford_side(to_f(y), g.inverse()) != Side::boundary) ++inverse_bad;
      if (sphere_membership(horo_coords(y), inv_sphere) != Side::boundary) ++inverse_bad;
    }
  }
  c.add("Ford inequality and Cygan sphere agree", agree_bad == 0,
        std::to_string(agree_total) + " random and " + std::to_string(boundary_total) + " boundary points, " +
            std::to_string(agree_bad) + " failures");
  c.add("g^-1 maps I(g) onto I(g^-1)", inverse_bad == 0 && boundary_total > 0,
        std::to_string(inverse_bad) + " failures");

  // Round trips through reduce_to_domain from an interior point.
  HoroCoords base{KNum(Rat(1, 4), Rat(1, 4)), Rat(1), Rat(2)};
  Vec3K x0 = lift(base);
  ProjPoint p0(x0);
  bool interior = in_omega(to_f(x0)) && spheres_containing(to_f(x0)).empty() &&
                  prism_membership(HeisPt{base.z, base.s}).location == PrismMembership::Interior;
  c.add("base point is interior to the domain", interior);
  std::vector<GroupElt> letters;
  for (const char* w : {"T1", "Tt", "R", "I"}) letters.push_back(eval_group(w));
  for (const auto& g : gens) letters.push_back(g.elt);
  std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) letters.push_back(letters[i].inverse());
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(1, 6);
  int trip_bad = 0;
  for (int i = 0; i < 500; ++i) {
    GroupElt g;
    for (int k = len(rng); k > 0; --k) g = g * letters[pick(rng)];
    Vec3K x = g.matrix().apply(x0);
    DomainReduction r = reduce_to_domain(to_f(x));
    bool ok = ProjPoint(r.point) == p0 && ProjPoint(r.elt.matrix().apply(to_f(x))) == ProjPoint(r.point) &&
              r.elt * g == GroupElt();
    if (!ok) ++trip_bad;
  }
  c.add("500 reductions return to the base point", trip_bad == 0, std::to_string(trip_bad) + " failures");
  return c;
}

CheckList depths() {
  CheckList c;
  std::set<std::int64_t> gen_depths;
  for (const auto& g : generator_table()) gen_depths.insert(depth(to_k(g.elt.matrix().column(0))));
  bool subset = std::all_of(gen_depths.begin(), gen_depths.end(), [](std::int64_t d) { return d == 1 || d == 2 || d == 4 || d == 7; });
  c.add("generator depths lie in {1, 2, 4, 7}", subset, show(std::vector<std::int64_t>(gen_depths.begin(), gen_depths.end())));
  auto realizable = [&](std::int64_t d) {
    auto v = null_vector_of_depth(d);
    if (!v) return std::optional<Vec3O>{};
    bool valid = is_primitive(*v) && square_norm(*v) == 0 && (*v)[2].norm() == d;
    c.add("witness for depth " + std::to_string(d) + " is a primitive null vector", valid, to_string(*v));
    return v;
  };
  for (std::int64_t d : {1, 2, 4, 7, 11}) {
    auto v = realizable(d);
    c.add("depth " + std::to_string(d) + " is realizable", v.has_value());
  }
  for (std::int64_t d : {8, 9}) {
    auto v = realizable(d);
    c.add("depth " + std::to_string(d) + " is not realizable", !v.has_value(), v ? to_string(*v) : "");
  }
  return c;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "generator table", generator_table_sanity},
      {2, "reflection classes", reflection_classes},
      {3, "isolated torsion classes", isolated_classes},
      {4, "stabilizer examples", stabilizer_examples},
      {5, "cusp torsion", cusp_torsion},
      {6, "mirror of R", mirror_R},
      {7, "mirror of L", mirror_L},
      {8, "presentation", presentation},
      {9, "congruence image", congruence},
      {10, "property suites", properties},
      {11, "depth spectrum", depths},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 11));
  app.add_flag("-v,--verbose", verbose, "list passing checks too");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const auto& cr : criteria()) {
    if (only != 0 && cr.id != only) continue;
    CheckList r;
    try {
      r = cr.run();
    } catch (const std::exception& e) {
      r.add("exception", false, e.what());
    }
    bool ok = r.all_passed() && !r.checks.empty();
    all_ok = all_ok && ok;
    std::cout << "criterion " << cr.id << ": " << (ok ? "PASS" : "FAIL") << "  " << cr.title << "\n";
    for (const auto& k : r.checks) {
      if (k.passed && !verbose) continue;
      std::cout << "    " << (k.passed ? "ok    " : "FAILED") << " " << k.name;
      if (!k.detail.empty()) std::cout << " [" << k.detail << "]";
      std::cout << "\n";
    }
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
