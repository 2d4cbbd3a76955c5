#include "picard/presentation.hpp"

#include <algorithm>

#include "picard/errors.hpp"
#include "picard/words.hpp"

namespace picard {

namespace {

bool fixes(const GroupElt& g, const Vec3O& v) { return apply(g, ProjPoint(v)) == ProjPoint(v); }

}  // namespace

std::pair<Mat3, Mat3> ab_linear() {
  static const Mat3 a = parse_matrix("-tau-2,isqrt7,isqrt7,-1,1,0,tau-1,1,1");
  static const Mat3 b = parse_matrix("1,taubar,-1,0,-1,tau,0,0,1");
  return {a, b};
}

std::pair<GroupElt, GroupElt> ab_matrices() {
  auto [a, b] = ab_linear();
  return {GroupElt(a, "a"), GroupElt(b, "b")};
}

const std::vector<std::string>& presentation_relators() {
  static const std::vector<std::string> r = {
      "a^7",
      "b^2",
      "c^6",
      "(a d^2)^4",
      "(c^-2 d^2)^4",
      "(c d^-1 c^2 d^-2)^3",
      "(c d^-2 c^2 d^-1)^3",
      "(d^2 c^-1 a^-2 d^3 c^2 a^-2)^2",
      "c^-1 a b",
      "d^-1 b a",
  };
  return r;
}

CheckList verify_relators() {
  CheckList out;
  auto [a, b] = ab_matrices();
  out.add("a in PU(2,1,O)", a.matrix().is_unitary());
  out.add("b in PU(2,1,O)", b.matrix().is_unitary());
  for (const auto& w : presentation_relators()) {
    Mat3 m = eval_word(w);
    out.add(w, m.is_pm_identity(), m.is_pm_identity() ? "" : m.to_string());
  }
  return out;
}

const std::vector<WordIdentity>& reflection_identities() {
  static const std::vector<WordIdentity> ids = {
      {"(T1 R)^2 T1^-1 Tt R ((T1 R)^2 T1^-1)^-1", "I", false, true},
      {"[T1,I] Tt R [T1,I]^-1", "T1 Tt R", false, true},
      {"T1 I T1^-1 R (T1 I T1)^-1", "isqrt7,0,4,0,-1,0,2,0,-isqrt7", true, true},
      {"(T1 I)^2 T1^-1 Tt R ((T1 I)^2 T1^-1)^-1", "I", false, false},
      {"T1 I T1^-1 R (T1 I T1^-1)^-1", "isqrt7,0,4,0,-1,0,2,0,-isqrt7", true, false},
  };
  return ids;
}

CheckList verify_reflection_identities() {
  CheckList out;
  for (const auto& id : reflection_identities()) {
    GroupElt lhs = eval_group(id.lhs);
    GroupElt rhs = id.rhs_matrix ? GroupElt(parse_matrix(id.rhs)) : eval_group(id.rhs);
    std::string name = id.lhs + " = " + (id.rhs_matrix ? "[" + id.rhs + "]" : id.rhs);
    out.add(name, lhs == rhs, id.printed ? "printed" : "corrected");
  }
  return out;
}

const std::vector<TorsionRow>& torsion_rows() {
  static const std::vector<TorsionRow> rows = {
      {7, 1, 2, "b", {}, "1,-tau,0", 2, "Tt R"},
      {7, 2, 2, "(ba)^3", {"d^3", "a^-1 c^3 a"}, "tau,0,1", 1, "T1 I T1^-1 R T1 I T1^-1"},
      {7, 3, 2, "((aba)^-1 babab)^2", {"(d^-2 c^2)^2"}, "tau,1,taubar", -2, "T1^2 I (T1^-1 I)^2 T1^2 I"},
      {7, 4, 2, "(ababa)^2", {"(a d^2)^2"}, "tau+1,1,taubar", -1, "A2 (R T1 I T1^-1)^2 A2^-1"},
      {7, 5, 3, "(ba)^2", {"d^2"}, std::nullopt, std::nullopt, "T1 (I T1^-1 R)^3"},
      {7, 6, 3, "[b, a^-1 babab]", {"c^-1 d^2 c^-2 d"}, "3+isqrt7,1,taubar", -3, "Tv I (Tt J) I Tv^-1"},
      {7, 7, 4, "(aba)^-1 babab", {"d^-2 c^2"}, "tau,1,taubar", -2, "I T1^-1 (I T1)^2 I T1^-1"},
      {7, 8, 4, "ababa", {"a d"}, "tau+1,1,taubar", -1, "T1 I (T1^-1 I)^2 T1 I R T1 I T1^-1"},
      {7, 9, 6, "ab", {"c"}, std::nullopt, std::nullopt, "R T1 I R (T1 I)^2 T1^-2"},
      {7, 10, 7, "a", {}, std::nullopt, std::nullopt, "T1 R T1 I R T1 I"},
      {8, 1, 2, "(aba)^-1 (d^2 c^-1 a^-2 d^3 c^2 a^-2) aba", {}, "1,0,-1", -2, "J"},
      {8, 2, 3, "a^-1 b a^-1 b a b a b a^-1 b a b", {"d^-2 c^2 d^-1 c"}, "tau+1,taubar,-tau", -3,
       "T1 I (Ttb^-1 J) I T1^-1"},
  };
  return rows;
}

std::vector<RowResult> verify_rows() {
  std::vector<RowResult> out;
  for (const auto& row : torsion_rows()) {
    RowResult r;
    r.row = &row;
    GroupElt g = eval_group(row.word);
    auto ord = projective_order(g);
    r.checks.add("order", ord == row.order, ord ? std::to_string(*ord) : "infinite");
    if (row.fixed) {
      Vec3O v = parse_vector(*row.fixed);
      r.checks.add("fixed point", fixes(g, v));
      r.checks.add("norm", square_norm(v) == *row.norm, std::to_string(square_norm(v)));
      if (ord == row.order) {
        EllipticType t = classify_elliptic(g, *ord);
        r.checks.add("locus", t.locus == ProjPoint(v), t.locus.to_string());
      }
    } else if (ord == row.order) {
      EllipticType t = classify_elliptic(g, *ord);
      bool ok = !t.reflection && !t.locus.is_rational();
      r.checks.add("fixed point outside K", ok, t.locus.to_string());
    }
    r.checks.add("other word", eval_group(row.other) == g);
    for (const auto& alias : row.aliases) r.alias_checks.add(alias, eval_group(alias) == g);
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<ClassRow>& class_rows() {
  static const std::vector<ClassRow> rows = {
      {1, 1, 2, true, "R", "-1,0,0,0,1,0,0,0,-1", "0,1,0", 1, 0, 0, 0, {}},
      {1, 2, 2, true, "I", "0,0,1,0,-1,0,1,0,0", "1,0,1", 2, 0, 0, 0, {}},
      {2, 1, 2, false, "(R T1 I T1^-1)^2", "isqrt7,0,4,0,1,0,2,0,-isqrt7", "-taubar,0,1", -1, 8, 2, 2, {}},
      {2, 2, 2, false, "I R", "0,0,1,0,1,0,1,0,0", "-1,0,1", -2, 4, 1, 1, {}},
      {2, 3, 2, false, "T1^2 I (T1^-1 I)^2 T1^2 I", "-taubar,tau,2,tau,2,taubar,2,taubar,-tau", "tau,1,taubar", -2,
       8, 0, 4, {}},
      {3, 1, 3, false, "T1 (I T1^-1)^2 (I T1)^2", "-1,tau,1,-taubar,1,0,1,0,0", "tau,1,-tau", -3, 6, 0, 3, {}},
      {3, 2, 3, false, "T1^2 (I T1^-1)^2 (I T1)^2", "-1,-taubar,1,tau,1,0,1,0,0", "-taubar,1,taubar", -3, 6, 0, 3,
       {}},
      {3, 3, 3, false, "(R T1)^2 I T1 I T1^-1 R T1 I T1^-1", "5,0,-3isqrt7,0,-1,0,-isqrt7,0,-4", std::nullopt,
       std::nullopt, 6, 1, 0, {}},
      {4, 1, 4, false, "I T1^-1 R T1", "0,0,1,0,1,2,1,-2,-2", "-1,-1,1", -1, 8, 2, 2, {}},
      {4, 2, 4, false, "(T1^-1 I)^2 (T1 I)^2", "0,0,1,0,1,1+taubar,1,-1-tau,-2", "taubar,-tau,-taubar", -2, 8, 0, 4,
       {2, 2}},
      {5, 1, 6, false, "T1 R (T1 I)^2 T1^-1 R T1 I T1^-1", "-5,0,3isqrt7,0,-1,0,isqrt7,0,4", std::nullopt,
       std::nullopt, 6, 1, 0, {}},
      {6, 1, 7, false, "I R T1", "0,0,1,0,1,1,1,-1,-taubar", std::nullopt, std::nullopt, 7, 0, 0, {}},
  };
  return rows;
}

std::vector<ClassRowResult> verify_class_rows() {
  std::vector<ClassRowResult> out;
  for (const auto& row : class_rows()) {
    ClassRowResult r;
    r.row = &row;
    GroupElt g = eval_group(row.word);
    r.checks.add("matrix", g == GroupElt(parse_matrix(row.matrix)), g.matrix().to_string());
    auto ord = projective_order(g);
    r.checks.add("order", ord == row.order, ord ? std::to_string(*ord) : "infinite");
    if (ord != row.order) {
      out.push_back(std::move(r));
      continue;
    }
    EllipticType t = classify_elliptic(g, *ord);
    r.checks.add("type", t.reflection == row.reflection, t.reflection ? "reflection" : "isolated");
    if (row.fixed) {
      Vec3O v = parse_vector(*row.fixed);
      r.checks.add("locus", t.locus == ProjPoint(v), t.locus.to_string());
      r.checks.add("norm", square_norm(v) == *row.norm, std::to_string(square_norm(v)));
    } else {
      r.checks.add("fixed point outside K", !t.locus.is_rational(), t.locus.to_string());
    }
    if (!row.reflection && t.locus.norm_sign() < 0) {
      FiniteGroup st = stabilizer(t.locus);
      r.checks.add("stabilizer order", st.projective_order() == row.stab_order,
                   std::to_string(st.projective_order()));
      r.checks.add("1-lines", st.one_lines == row.one_lines, std::to_string(st.one_lines));
      r.checks.add("2-lines", st.two_lines == row.two_lines, std::to_string(st.two_lines));
      if (!row.two_line_orbits.empty()) {
        auto orbits = st.two_line_orbits;
        std::sort(orbits.begin(), orbits.end());
        r.checks.add("2-line orbits", orbits == row.two_line_orbits);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::optional<ClassMatch>> match_class_rows(const std::vector<TorsionClass>& classes) {
  std::vector<std::pair<const ClassRow*, GroupElt>> elts;
  for (const auto& row : class_rows()) elts.emplace_back(&row, eval_group(row.word));
  std::vector<std::optional<ClassMatch>> out;
  for (const auto& cl : classes) {
    std::optional<ClassMatch> m;
    for (const auto& [row, h] : elts) {
      if (row->order != cl.proj_order || row->reflection != cl.reflection) continue;
      if (auto pc = conjugate_to_power(cl.rep, h)) {
        m = ClassMatch{row, *pc};
        break;
      }
    }
    out.push_back(m);
  }
  return out;
}

std::vector<CoverageItem> torsion_coverage(const std::vector<TorsionClass>& classes) {
  std::vector<std::pair<const TorsionRow*, GroupElt>> elts;
  for (const auto& row : torsion_rows()) elts.emplace_back(&row, eval_group(row.word));
  std::vector<CoverageItem> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CoverageItem item;
    item.class_index = i;
    for (const auto& [row, h] : elts) {
      if (row->order % classes[i].proj_order != 0) continue;
      if (auto pc = conjugate_to_power(classes[i].rep, h)) {
        item.found = true;
        item.row = row;
        item.power = pc->power;
        item.conjugator = pc->conjugator;
        break;
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace picard
