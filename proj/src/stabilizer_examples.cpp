#include <algorithm>
#include <deque>
#include <set>

#include "picard/errors.hpp"
#include "picard/ford.hpp"
#include "picard/torsion.hpp"
#include "picard/words.hpp"

namespace picard {

namespace {

struct LinearGroup {
  std::size_t order = 0, scalars = 0;
};

LinearGroup linear_closure(const std::vector<Mat3>& gens, std::size_t cap) {
  std::set<Mat3> seen = {Mat3::identity()};
  std::deque<Mat3> queue = {Mat3::identity()};
  while (!queue.empty()) {
    Mat3 x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Mat3 y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw CapExceeded("linear closure too large", static_cast<long>(cap));
        queue.push_back(y);
      }
    }
  }
  LinearGroup out;
  out.order = seen.size();
  out.scalars = static_cast<std::size_t>(std::count_if(seen.begin(), seen.end(), [](const Mat3& m) { return m.is_scalar(); }));
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

// Labels of the spheres through x, and whether each expected (alpha, j)
// appears among their aliases.
void check_spheres(CheckList& out, const std::string& tag, const Vec3F& x,
                   const std::vector<std::pair<std::string, int>>& expected) {
  auto hits = spheres_containing(x);
  std::vector<std::string> labels;
  bool all_boundary = true;
  for (const auto& h : hits) {
    labels.push_back(h.sphere->label());
    all_boundary = all_boundary && h.side == Side::boundary;
  }
  out.add(tag + ": lies on " + std::to_string(expected.size()) + " spheres",
          hits.size() == expected.size() && all_boundary, join(labels));
  for (const auto& [word, j] : expected) {
    CuspElt alpha = CuspElt::from_matrix(eval_word(word));
    bool found = std::any_of(hits.begin(), hits.end(), [&](const SphereHit& h) {
      const auto& al = h.sphere->aliases;
      return std::find(al.begin(), al.end(), std::pair{alpha, j - 1}) != al.end();
    });
    std::string name = (word == "Id" ? "" : word + " ") + "I(A" + std::to_string(j) + ")";
    out.add(tag + ": on " + name, found);
  }
}

std::vector<std::string> facet_names(const Vec3F& x) {
  HoroAlg h = horo_coords(x);
  std::vector<std::string> out;
  for (auto f : prism_membership(HeisAlg{h.z, h.s}).facets) out.push_back(to_string(f));
  return out;
}

}  // namespace

StabilizerExamples verify_stabilizer_examples(std::size_t cap) {
  StabilizerExamples rep;
  CheckList& out = rep.checks;

  // The fixed point of (R T1 I T1^-1)^2.
  const std::string e1 = "(-taubar,0,1)";
  Vec3O v1 = parse_vector("-taubar,0,1");
  Vec3F x1 = to_f(v1);
  HoroCoords hc = horo_coords(to_k(v1));
  out.add(e1 + ": horospherical coordinates (0, 1, 1)", hc.z.is_zero() && hc.s == 1 && hc.u == 1);
  out.add(e1 + ": in the domain", in_omega(x1));
  GroupElt m = eval_group("(R T1 I T1^-1)^2");
  out.add(e1 + ": fixed by (R T1 I T1^-1)^2", apply(m, ProjPoint(v1)) == ProjPoint(v1));
  auto f1 = facet_names(x1);
  out.add(e1 + ": on two sides of the prism", f1.size() == 2, join(f1));
  check_spheres(out, e1, x1, {{"Id", 6}, {"T1", 1}, {"T1^-1 Tv", 1}});
  const std::vector<std::string> pairings1 = {"A6", "T1 A1 T1^-1", "T1^-1 Tv A1 Tv^-1 T1"};
  for (const auto& w : pairings1) {
    out.add(e1 + ": fixed by " + w, apply(eval_group(w), ProjPoint(v1)) == ProjPoint(v1));
  }
  out.add("(T1 R)^-1 T1 Tt R Tt R = R", eval_group("(T1 R)^-1 T1 Tt R Tt R") == eval_group("R"));
  // Linear statements depend on signs; A6 is taken with its printed sign,
  // which is the negative of the sign-canonical one.
  Alphabet printed = standard_alphabet();
  printed["A6"] = parse_matrix("isqrt7,0,4,0,1,0,2,0,-isqrt7");
  std::vector<Mat3> gens1 = {eval_word("R", printed)};
  for (const auto& w : pairings1) gens1.push_back(eval_word(w, printed));
  LinearGroup lin1 = linear_closure(gens1, cap);
  out.add(e1 + ": linear group of order 16 with 2 scalars", lin1.order == 16 && lin1.scalars == 2,
          std::to_string(lin1.order) + " / " + std::to_string(lin1.scalars));
  FiniteGroup st1 = stabilizer(ProjPoint(v1), cap);
  std::vector<std::int64_t> norms;
  for (const auto& r : st1.reflections) norms.push_back(r.polar_norm);
  std::sort(norms.begin(), norms.end());
  out.add(e1 + ": stabilizer of order 8", st1.projective_order() == 8 && st1.linear_order == 16,
          std::to_string(st1.projective_order()) + " / " + std::to_string(st1.linear_order));
  out.add(e1 + ": reflections with polar norms 1, 1, 2, 2", norms == std::vector<std::int64_t>{1, 1, 2, 2});
  CycleGraph g1 = build_cycle_graph({{ProjPoint(v1), m}});
  int r1 = g1.find(ProjPoint(v1), m);
  std::size_t comp1 = 0;
  for (const auto& c : g1.components()) {
    if (std::find(c.begin(), c.end(), r1) != c.end()) comp1 = c.size();
  }
  out.add(e1 + ": cycle graph component is a triangle", comp1 == 3, std::to_string(comp1) + " vertices");

  // The order-6 element conjugated so that its fixed point lies in the domain.
  const std::string e2 = "order 6 point";
  GroupElt n = eval_group("(Tt R) T1 R (T1 I)^2 T1^-1 R T1 I T1^-1 (R Tt^-1)");
  auto ord = projective_order(n);
  out.add(e2 + ": element of order 6", ord == 6);
  if (ord != 6) return rep;
  ProjPoint w0 = classify_elliptic(n, 6).locus;
  rep.printed_claims.add("fixed point of " + n.word() + " in the domain", in_omega(w0.coords()), w0.to_string());
  DomainReduction red = reduce_to_domain(w0.coords());
  ProjPoint w(red.point);
  out.add(e2 + ": reduced fixed point in the domain", in_omega(w.coords()), w.to_string());
  auto f2 = facet_names(w.coords());
  bool side = std::any_of(f2.begin(), f2.end(), [](const std::string& f) { return f != "S0" && f != "S2"; });
  out.add(e2 + ": on no side of the cone", !side, join(f2));
  check_spheres(out, e2, w.coords(), {{"Id", 2}, {"Id", 3}, {"R Tt^-1", 4}, {"R Tt^-1 T1^-1", 5}, {"Tt", 6}});
  const std::vector<std::string> pairings2 = {"Tt R A2^-1", "T1 Tt R A3^-1", "Tt^2 R Tt A6^-1 Tt^-1",
                                              "T1 R Tt^-1 A4^-1 Tt R", "T1^-1 R Tt^-1 T1^-1 A5^-1 T1 Tt R"};
  std::vector<Mat3> gens2;
  for (const auto& p : pairings2) {
    out.add(e2 + ": fixed by " + p, apply(eval_group(p), w) == w);
    gens2.push_back(eval_word(p));
  }
  out.add("Tt R A2^-1 maps the point to the domain", in_omega(apply(eval_group("Tt R A2^-1"), w).coords()));
  LinearGroup lin2 = linear_closure(gens2, cap);
  out.add(e2 + ": linear group of order 12 with 2 scalars", lin2.order == 12 && lin2.scalars == 2,
          std::to_string(lin2.order) + " / " + std::to_string(lin2.scalars));
  Normalized nz = normalize_vertical(w.coords());
  ProjPoint wn(nz.point);
  GroupElt c = nz.elt * red.elt;
  GroupElt n0 = c * n * c.inverse();
  CycleGraph g2 = build_cycle_graph({{wn, n0}});
  int r2 = g2.find(wn, n0);
  std::size_t comp2 = 0;
  for (const auto& c : g2.components()) {
    if (std::find(c.begin(), c.end(), r2) != c.end()) comp2 = c.size();
  }
  out.add(e2 + ": single vertex with 5 loops", comp2 == 1 && g2.loops(r2) == 5,
          std::to_string(comp2) + " vertices, " + std::to_string(g2.loops(r2)) + " loops");
  FiniteGroup st2 = stabilizer(g2, r2, cap);
  out.add(e2 + ": stabilizer of order 6", st2.projective_order() == 6 && st2.linear_order == 12);
  return rep;
}

}  // namespace picard
