#include "picard/mirror.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "picard/errors.hpp"
#include "picard/heisenberg.hpp"
#include "picard/torsion.hpp"
#include "picard/words.hpp"

namespace picard {

namespace {

const std::array<Vec3O, 4>& L_polars() {
  static const std::array<Vec3O, 4> v = {parse_vector("1,1,taubar"), parse_vector("-isqrt7,tau,2"),
                                         parse_vector("isqrt7,tau,2"), parse_vector("0,1,taubar")};
  return v;
}

const Mat3& s1_matrix() {
  static const Mat3 m = parse_matrix("-tau-1,tau-2,taubar+2,3tau,4,-5,6,3taubar,5tau-4");
  return m;
}

const Mat3& s2_matrix() {
  static const Mat3 m =
      parse_matrix("tau-3,isqrt7,-isqrt7,taubar+3,1-isqrt7,isqrt7,-2isqrt7,-tau-3,tau+4");
  return m;
}

const std::vector<std::string>& L_relators() {
  static const std::vector<std::string> r = {"r1^2", "r2^3", "r3^2", "r4^2", "(s2^-1 s1)^2", "s1^-1 r4 r1 r3 tv r2"};
  return r;
}

Alphabet L_alphabet_with(const std::array<int, 4>& perm) {
  Alphabet a;
  for (int i = 0; i < 4; ++i) a["r" + std::to_string(i + 1)] = make_reflection(L_polars()[perm[i]]);
  a["s1"] = s1_matrix();
  a["s2"] = s2_matrix();
  a["tv"] = Tv();
  return a;
}

std::string vec_name(int i) { return "v" + std::to_string(i + 1); }

// Exact parabolicity: g has a null eigenvector n with eigenvalue +-1 and
// (g - lambda)^3 = 0.
bool is_parabolic_fixing(const Mat3& g, const Vec3K& n) {
  if (!herm_inner(n, n).is_zero()) return false;
  Vec3K gn = g.apply(n);
  if (!proportional(gn, n)) return false;
  KNum lambda;
  for (int i = 0; i < 3; ++i) {
    if (!n[i].is_zero()) {
      lambda = gn[i] / n[i];
      break;
    }
  }
  if (lambda != KNum(1) && lambda != KNum(-1)) return false;
  Mat3 shifted = g;
  OInt l = OInt::from_knum(lambda);
  for (int i = 0; i < 3; ++i) shifted(i, i) -= l;
  Mat3 cube = shifted * shifted * shifted;
  return std::all_of(cube.e.begin(), cube.e.end(), [](const OInt& x) { return x.is_zero(); });
}

}  // namespace

MirrorContext MirrorContext::of_R() {
  return {"R", Vec3O{0, 1, 0}, Vec3K{KNum(1), KNum(0), KNum(0)}, Vec3K{KNum(0), KNum(0), KNum(1)}};
}

MirrorContext MirrorContext::of_L() {
  return {"L", Vec3O{1, -OInt::tau(), 0}, Vec3K{KNum(1), KNum(0), KNum(0)}, Vec3K{KNum(0), KNum(1), KNum::taubar()}};
}

bool preserves_mirror(const GroupElt& g, const MirrorContext& ctx) {
  Vec3O p = ctx.polar;
  return proportional(to_k(g.matrix().apply(p)), to_k(p));
}

namespace {

using Mat2K = std::array<KNum, 4>;

// Matrix of g on the complement in the basis e, f.
Mat2K restrict_to_mirror(const Mat3& g, const MirrorContext& ctx) {
  int i = 0, j = 1;
  KNum det;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    det = ctx.e[a] * ctx.f[b] - ctx.e[b] * ctx.f[a];
    if (!det.is_zero()) {
      i = a;
      j = b;
      break;
    }
  }
  auto coords = [&](const Vec3K& w) {
    KNum x = (w[i] * ctx.f[j] - w[j] * ctx.f[i]) / det;
    KNum y = (ctx.e[i] * w[j] - ctx.e[j] * w[i]) / det;
    return std::pair{x, y};
  };
  auto [a, c] = coords(g.apply(ctx.e));
  auto [b, d] = coords(g.apply(ctx.f));
  return {a, b, c, d};
}

Mat2K mul2(const Mat2K& x, const Mat2K& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

bool is_scalar2(const Mat2K& m) { return m[1].is_zero() && m[2].is_zero() && m[0] == m[3]; }

}  // namespace

bool scalar_on_mirror(const Mat3& g, const MirrorContext& ctx) {
  return preserves_mirror(GroupElt(g), ctx) && is_scalar2(restrict_to_mirror(g, ctx));
}

std::optional<int> order_on_mirror(const Mat3& g, const MirrorContext& ctx, int bound) {
  if (!preserves_mirror(GroupElt(g), ctx)) return std::nullopt;
  const Mat2K m = restrict_to_mirror(g, ctx);
  Mat2K p = m;
  for (int n = 1; n <= bound; ++n) {
    if (is_scalar2(p)) return n;
    p = mul2(p, m);
  }
  return std::nullopt;
}

std::vector<Vec3O> search_orthogonal_mirrors(const MirrorContext& ctx, std::int64_t norm, std::int64_t height) {
  if (height < 1) throw InvalidArgument("height must be at least 1");
  std::vector<OInt> box;
  for (std::int64_t a = -height; a <= height; ++a) {
    for (std::int64_t b = -height; b <= height; ++b) box.emplace_back(a, b);
  }
  // <v, polar> = sum_i conj(polar[2 - i]) v[i]; solve for the coordinate k
  // with a nonzero coefficient.
  std::array<KNum, 3> coef;
  for (int i = 0; i < 3; ++i) coef[i] = ctx.polar[2 - i].conj().to_knum();
  int k = 0;
  while (coef[k].is_zero()) ++k;
  const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
  auto in_box = [&](const OInt& x) { return std::abs(x.a) <= height && std::abs(x.b) <= height; };
  std::set<Vec3O> found;
  for (const auto& x : box) {
    for (const auto& y : box) {
      KNum rhs = -(coef[i1] * x.to_knum() + coef[i2] * y.to_knum()) / coef[k];
      if (!rhs.is_integral()) continue;
      Vec3O v;
      v[i1] = x;
      v[i2] = y;
      v[k] = OInt::from_knum(rhs);
      if (!in_box(v[k]) || square_norm(v) != norm || !is_primitive(v)) continue;
      found.insert(canonical_sign(v));
    }
  }
  std::vector<Vec3O> out(found.begin(), found.end());
  auto height_of = [](const Vec3O& v) {
    std::int64_t h = 0;
    for (const auto& c : v) h = std::max({h, std::abs(c.a), std::abs(c.b)});
    return h;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Vec3O& a, const Vec3O& b) { return height_of(a) < height_of(b); });
  return out;
}

MirrorRReport verify_mirror_R() {
  MirrorRReport rep;
  auto& c = rep.checks;
  const MirrorContext ctx = MirrorContext::of_R();
  auto g = [](const std::string& w) { return eval_group(w); };

  c.add("I preserves the mirror", preserves_mirror(g("I"), ctx));
  c.add("M preserves the mirror", preserves_mirror(g("M"), ctx));
  c.add("T1 does not preserve the mirror", !preserves_mirror(g("T1"), ctx));
  auto ord = projective_order(g("M Tv I"));
  c.add("M Tv I has order 6", ord == 6, ord ? std::to_string(*ord) : "infinite");
  c.add("(M Tv I)^3 = R", g("(M Tv I)^3") == g("R"));
  for (const char* r : {"I^2", "M^2", "R^2", "(M Tv I)^3 R^-1", "[R,I]", "[R,M]", "[R,Tv]"}) {
    c.add(std::string("relator ") + r, g(r).is_identity());
  }

  struct Expect {
    const char* word;
    int one, two;
  };
  for (const Expect& e : {Expect{"I R", 1, 1}, Expect{"(R T1 I T1^-1)^2", 2, 2}, Expect{"M Tv I", 1, 0}}) {
    GroupElt x = g(e.word);
    auto n = projective_order(x);
    EllipticType t = classify_elliptic(x, *n);
    SpecialPoint sp{e.word, t.locus};
    bool on_mirror = !t.reflection && t.locus.coords()[1].is_zero();
    FiniteGroup st = stabilizer(t.locus);
    sp.one_lines = st.one_lines;
    sp.two_lines = st.two_lines;
    sp.stab_order = st.projective_order();
    std::string detail = t.locus.to_string() + ": " + std::to_string(sp.one_lines) + " 1-lines, " +
                         std::to_string(sp.two_lines) + " 2-lines, stabilizer order " + std::to_string(sp.stab_order);
    c.add(std::string("fixed point of ") + e.word + " lies on the mirror", on_mirror, t.locus.to_string());
    c.add(std::string("lines through the fixed point of ") + e.word,
          sp.one_lines == e.one && sp.two_lines == e.two, detail);
    rep.points.push_back(sp);
  }
  // the common fixed point of I and R
  const Vec3F& p = rep.points.front().point.coords();
  c.add("I and R fix the fixed point of I R",
        proportional(g("I").matrix().apply(p), p) && proportional(g("R").matrix().apply(p), p));
  return rep;
}

const std::map<std::string, Mat3>& mirror_L_alphabet() {
  static const Alphabet a = L_alphabet_with({0, 1, 2, 3});
  return a;
}

MirrorLReport verify_mirror_L(std::int64_t height, int cusp_search_len) {
  MirrorLReport rep;
  auto& c = rep.checks;
  const MirrorContext ctx = MirrorContext::of_L();
  const Alphabet& alpha = mirror_L_alphabet();

  rep.found_polars = search_orthogonal_mirrors(ctx, 2, height);
  for (const auto& v : search_orthogonal_mirrors(ctx, 1, height)) rep.found_polars.push_back(v);
  for (int i = 0; i < 4; ++i) {
    const Vec3O& v = L_polars()[i];
    bool ok = square_norm(v) == 2 && herm_inner(v, ctx.polar).is_zero();
    bool found = std::find(rep.found_polars.begin(), rep.found_polars.end(), canonical_sign(v)) != rep.found_polars.end();
    c.add(vec_name(i) + " has norm 2 and is orthogonal to the polar", ok, to_string(v));
    c.add(vec_name(i) + " found by the search", found,
          "norm " + std::to_string(square_norm(v)) + ", height " + std::to_string(height));
  }
  for (const char* name : {"r1", "r2", "r3", "r4", "s1", "s2", "tv"}) {
    const Mat3& m = alpha.at(name);
    c.add(std::string(name) + " lies in the group and preserves L",
          is_in_gamma(to_k(m)) && preserves_mirror(GroupElt(m), ctx));
  }
  Vec3K n{KNum(-1), KNum(1), KNum::taubar()};
  c.add("s2 is parabolic fixing (-1,1,taubar)", is_parabolic_fixing(s2_matrix(), n));
  c.add("s2 has infinite order", !projective_order(GroupElt(s2_matrix())).has_value());
  c.add("Tt R acts trivially on L", scalar_on_mirror(Ttau() * Rmat(), ctx));

  for (const auto& r : L_relators()) {
    c.add("relator " + r + " is trivial on L", scalar_on_mirror(eval_word(r, alpha), ctx));
  }

  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    Alphabet a = L_alphabet_with(perm);
    bool all = std::all_of(L_relators().begin(), L_relators().end(),
                           [&](const std::string& r) { return scalar_on_mirror(eval_word(r, a), ctx); });
    if (all) {
      std::string s;
      for (int i = 0; i < 4; ++i) s += (i ? " " : "") + std::string("r") + std::to_string(i + 1) + "=" + vec_name(perm[i]);
      rep.passing_permutations.push_back(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  c.add("some assignment of v1..v4 to r1..r4 satisfies every relator", !rep.passing_permutations.empty(),
        std::to_string(rep.passing_permutations.size()) + " of 24");

  for (const char* name : {"r1", "r2", "r3", "r4", "s1", "s2", "tv"}) {
    rep.orders_on_mirror[name] = order_on_mirror(alpha.at(name), ctx);
  }
  rep.orders_on_mirror["s2^-1 s1"] = order_on_mirror(eval_word("s2^-1 s1", alpha), ctx);
  for (const char* w : {"s1^-1 r4 r1 r3 tv", "s1^-1 r4 r1 r3 tv r2"}) {
    if (scalar_on_mirror(eval_word(w, alpha), ctx)) rep.trivial_words.emplace_back(w);
  }

  // No short word in the generators carries the cusp of tv to the cusp of s2.
  std::vector<Mat3> letters;
  for (const char* name : {"r1", "r2", "r3", "r4", "s1", "s2", "tv"}) {
    letters.push_back(alpha.at(name));
    if (name[0] != 'r') letters.push_back(alpha.at(name).unitary_inverse());
  }
  const Vec3O target = primitive_rep(n);
  std::set<Vec3O> seen = {Vec3O{1, 0, 0}};
  std::vector<Vec3O> frontier = {Vec3O{1, 0, 0}};
  bool reached = false;
  for (int d = 0; d < cusp_search_len && !reached; ++d) {
    std::vector<Vec3O> next;
    for (const auto& v : frontier) {
      for (const auto& l : letters) {
        Vec3O u = primitive_rep(to_k(l.apply(v)));
        if (u == target) reached = true;
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  c.add("the two cusps are not related by words of length <= " + std::to_string(cusp_search_len), !reached,
        std::to_string(seen.size()) + " cusp images visited");
  return rep;
}

}  // namespace picard
