#include "picard/heisenberg.hpp"

#include "picard/errors.hpp"

namespace picard {

HeisPt heis_mul(const HeisPt& p, const HeisPt& q) {
  return {p.z + q.z, p.s + q.s + tau_coef(p.z * q.z.conj())};
}

HeisPt heis_inv(const HeisPt& p) { return {-p.z, -p.s}; }

FNum tau_coef(const FNum& x) { return (x - x.conj()) / FNum(KNum::isqrt7()); }

HeisAlg heis_mul(const HeisAlg& p, const HeisAlg& q) {
  return {p.z + q.z, p.s + q.s + tau_coef(p.z * q.z.conj())};
}

MatK heis_matrix(const KNum& z, const Rat& s) {
  KNum corner = (KNum(-z.norm()) + KNum(s) * KNum::isqrt7()) / KNum(2);
  return {KNum(1), -z.conj(), corner, KNum(0), KNum(1), z, KNum(0), KNum(0), KNum(1)};
}

Mat3 T1() { return to_o(heis_matrix(KNum(1), Rat(1))); }
Mat3 Ttau() { return to_o(heis_matrix(KNum::tau(), Rat(0))); }
Mat3 Ttaubar() { return to_o(heis_matrix(KNum::taubar(), Rat(0))); }
Mat3 Tv() { return to_o(heis_matrix(KNum(0), Rat(2))); }
Mat3 Rmat() { return Mat3::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}); }

// ---- CuspElt

namespace {

std::int64_t to_i64(const Int& z) {
  if (!z.fits_slong_p()) throw ArithmeticOverflow("cusp coordinate overflow");
  return z.get_si();
}

Rat base_s(std::int64_t m, std::int64_t n) { return Rat(m) - Rat(m) * Rat(n); }

}  // namespace

bool CuspElt::fixes_infinity(const Mat3& g) { return g(1, 0).is_zero() && g(2, 0).is_zero(); }

CuspElt CuspElt::from_matrix(const Mat3& g0) {
  if (!fixes_infinity(g0)) throw InvalidArgument("matrix does not fix the cusp (1,0,0)");
  Mat3 g = g0;
  if (g(0, 0) == OInt(-1)) g = -g;
  if (g(0, 0) != OInt(1) || g(2, 2) != OInt(1) || !g(2, 1).is_zero()) {
    throw InvalidArgument("not an element of the cusp group");
  }
  CuspElt c;
  if (g(1, 1) == OInt(1)) {
    c.eps = 0;
  } else if (g(1, 1) == OInt(-1)) {
    c.eps = 1;
  } else {
    throw InvalidArgument("not an element of the cusp group");
  }
  c.m = g(1, 2).a;
  c.n = g(1, 2).b;
  Rat s = Rat(g(0, 2).b);
  Rat twice_l = s - base_s(c.m, c.n);
  if (twice_l.get_den() != 1 || twice_l.get_num() % 2 != 0) throw InvalidArgument("not an element of the cusp group");
  c.l = to_i64(twice_l.get_num() / 2);
  if (c.to_matrix() != g) throw InvalidArgument("not an element of the cusp group");
  return c;
}

HeisPt CuspElt::translation() const {
  return {KNum(Rat(m), Rat(n)), base_s(m, n) + Rat(2 * l)};
}

Mat3 CuspElt::to_matrix() const {
  HeisPt t = translation();
  Mat3 g = to_o(heis_matrix(t.z, t.s));
  return eps ? g * Rmat() : g;
}

CuspElt CuspElt::inverse() const { return from_matrix(to_matrix().unitary_inverse()); }

CuspElt operator*(const CuspElt& x, const CuspElt& y) { return CuspElt::from_matrix(x.to_matrix() * y.to_matrix()); }

HeisPt CuspElt::act(const HeisPt& p) const {
  HeisPt q = eps ? HeisPt{-p.z, p.s} : p;
  return heis_mul(translation(), q);
}

HeisAlg CuspElt::act(const HeisAlg& p) const {
  HeisPt t = translation();
  HeisAlg q = eps ? HeisAlg{-p.z, p.s} : p;
  return heis_mul(HeisAlg{FNum(t.z), FNum(KNum(t.s))}, q);
}

std::string CuspElt::word() const {
  std::string w;
  auto part = [&w](const char* sym, std::int64_t e) {
    if (e == 0) return;
    if (!w.empty()) w += " ";
    w += sym;
    if (e != 1) w += "^" + std::to_string(e);
  };
  part("T1", m);
  part("Tt", n);
  part("R", eps);
  part("Tv", l);
  return w.empty() ? "Id" : w;
}

// ---- prism

std::string to_string(PrismFacet f) {
  switch (f) {
    case PrismFacet::A0: return "a=0";
    case PrismFacet::B0: return "b=0";
    case PrismFacet::AB1: return "a+b=1";
    case PrismFacet::S0: return "s=0";
    case PrismFacet::S2: return "s=2";
  }
  return "?";
}

namespace {

PrismMembership classify(const std::array<int, 5>& signs) {
  static constexpr PrismFacet kFacets[5] = {PrismFacet::A0, PrismFacet::B0, PrismFacet::AB1, PrismFacet::S0,
                                            PrismFacet::S2};
  PrismMembership out{PrismMembership::Interior, {}};
  for (int i = 0; i < 5; ++i) {
    if (signs[i] < 0) return {PrismMembership::Outside, {}};
    if (signs[i] == 0) out.facets.push_back(kFacets[i]);
  }
  if (!out.facets.empty()) out.location = PrismMembership::Boundary;
  return out;
}

}  // namespace

PrismMembership prism_membership(const HeisPt& p) {
  const Rat& a = p.z.a;
  const Rat& b = p.z.b;
  return classify({sgn(a), sgn(b), sgn(Rat(1 - a - b)), sgn(p.s), sgn(Rat(2 - p.s))});
}

PrismMembership prism_membership(const HeisAlg& p) {
  FNum b = tau_coef(p.z);
  FNum a = p.z - b * FNum(KNum::tau());
  return classify({a.real_sign(), b.real_sign(), (FNum(1) - a - b).real_sign(), p.s.real_sign(),
                   (FNum(2) - p.s).real_sign()});
}

CuspElt prism_reducer(const HeisAlg& p) {
  FNum b = tau_coef(p.z);
  FNum a = p.z - b * FNum(KNum::tau());
  std::int64_t ka = to_i64(a.real_floor());
  std::int64_t kb = to_i64(b.real_floor());
  CuspElt alpha = CuspElt::from_matrix(T1().pow(-ka) * Ttau().pow(-kb));
  HeisAlg q = alpha.act(p);
  FNum b1 = tau_coef(q.z);
  FNum a1 = q.z - b1 * FNum(KNum::tau());
  if ((a1 + b1 - FNum(1)).real_sign() > 0) {
    CuspElt flip{1, 1, 1, 0};  // z -> 1 + tau - z
    alpha = flip * alpha;
    q = flip.act(q);
  }
  FNum half = q.s / FNum(2);
  std::int64_t k = to_i64(half.real_floor());
  if (k != 0) {
    CuspElt lift{0, 0, 0, -k};
    alpha = lift * alpha;
  }
  return alpha;
}

PrismReduction reduce_to_prism(const HeisPt& p) {
  CuspElt alpha = prism_reducer(HeisAlg{FNum(p.z), FNum(KNum(p.s))});
  HeisPt q = alpha.act(p);
  if (prism_membership(q).location == PrismMembership::Outside) {
    throw std::logic_error("prism reduction left the prism");
  }
  return {alpha, q};
}

// ---- overlaps

namespace {

// Affine map x -> A x + c on (a, b, s).
struct Affine {
  std::array<std::array<Rat, 3>, 3> A;
  std::array<Rat, 3> c;
};

std::array<Rat, 3> coords(const HeisPt& p) { return {p.z.a, p.z.b, p.s}; }

Affine affine_of(const CuspElt& g) {
  Affine f;
  f.c = coords(g.act(HeisPt{KNum(0), Rat(0)}));
  const HeisPt basis[3] = {{KNum(1), Rat(0)}, {KNum::tau(), Rat(0)}, {KNum(0), Rat(1)}};
  for (int j = 0; j < 3; ++j) {
    auto img = coords(g.act(basis[j]));
    for (int i = 0; i < 3; ++i) f.A[i][j] = img[i] - f.c[i];
  }
  return f;
}

// Halfspace n.x + d >= 0.
struct Half {
  std::array<Rat, 3> n;
  Rat d;
};

std::vector<Half> prism_halfspaces() {
  return {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{-1, -1, 0}, 1}, {{0, 0, 1}, 0}, {{0, 0, -1}, 2}};
}

bool solve3(const std::array<std::array<Rat, 3>, 3>& M, const std::array<Rat, 3>& rhs, std::array<Rat, 3>& x) {
  auto det3 = [](const std::array<std::array<Rat, 3>, 3>& a) {
    return Rat(a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]));
  };
  Rat d = det3(M);
  if (sgn(d) == 0) return false;
  for (int k = 0; k < 3; ++k) {
    auto Mk = M;
    for (int i = 0; i < 3; ++i) Mk[i][k] = rhs[i];
    x[k] = det3(Mk) / d;
  }
  return true;
}

bool feasible_vertex(const std::vector<Half>& hs, std::array<Rat, 3>& witness) {
  const std::size_t n = hs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<std::array<Rat, 3>, 3> M{hs[i].n, hs[j].n, hs[k].n};
        std::array<Rat, 3> rhs{-hs[i].d, -hs[j].d, -hs[k].d};
        std::array<Rat, 3> x;
        if (!solve3(M, rhs, x)) continue;
        bool ok = true;
        for (const auto& h : hs) {
          if (sgn(Rat(h.n[0] * x[0] + h.n[1] * x[1] + h.n[2] * x[2] + h.d)) < 0) {
            ok = false;
            break;
          }
        }
        if (ok) {
          witness = x;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::vector<CuspOverlap> enumerate_cusp_overlaps() {
  constexpr std::int64_t kBox = 3;
  std::vector<CuspOverlap> out;
  const auto base = prism_halfspaces();
  for (std::int64_t m = -kBox; m <= kBox; ++m) {
    for (std::int64_t n = -kBox; n <= kBox; ++n) {
      for (int eps = 0; eps <= 1; ++eps) {
        for (std::int64_t l = -kBox; l <= kBox; ++l) {
          CuspElt g{m, n, eps, l};
          Affine f = affine_of(g);
          std::vector<Half> hs = base;
          // g(x) in P: h.n . (A x + c) + h.d >= 0
          for (const auto& h : base) {
            Half t;
            for (int j = 0; j < 3; ++j) t.n[j] = h.n[0] * f.A[0][j] + h.n[1] * f.A[1][j] + h.n[2] * f.A[2][j];
            t.d = h.n[0] * f.c[0] + h.n[1] * f.c[1] + h.n[2] * f.c[2] + h.d;
            hs.push_back(t);
          }
          std::array<Rat, 3> w;
          if (!feasible_vertex(hs, w)) continue;
          if (std::abs(m) == kBox || std::abs(n) == kBox || std::abs(l) == kBox) {
            throw std::logic_error("cusp overlap search box too small");
          }
          out.push_back({g, w});
        }
      }
    }
  }
  return out;
}

std::vector<CuspTorsionFamily> cusp_torsion_classes() {
  struct Base {
    const char* name;
    std::int64_t m, n;
  };
  const Base bases[4] = {{"R Tv^k", 0, 0}, {"T1 R Tv^k", 1, 0}, {"Tt R Tv^k", 0, 1}, {"T1 Tt R Tv^k", 1, 1}};
  std::vector<CuspTorsionFamily> out;
  for (const auto& b : bases) {
    CuspTorsionFamily f;
    f.family = b.name;
    f.w = KNum(Rat(b.m), Rat(b.n));
    f.base_s = base_s(b.m, b.n);
    // (T(w,s0) R)^2 = T(0, 2 s0), so order 2 iff s0 = base_s + 2k = 0
    Rat k = -f.base_s / 2;
    f.has_torsion = k.get_den() == 1;
    f.k = f.has_torsion ? to_i64(k.get_num()) : 0;
    if (f.has_torsion) {
      CuspElt c{b.m, b.n, 1, f.k};
      f.element = c.to_group();
      if (!f.element.pow(2).is_identity()) throw std::logic_error("cusp torsion element is not an involution");
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace picard
