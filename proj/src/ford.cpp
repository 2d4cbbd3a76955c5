#include "picard/ford.hpp"

#include <cmath>
#include <map>

#include "picard/errors.hpp"

namespace picard {

namespace {

Mat3 parse_rows(const std::array<const char*, 9>& entries) {
  Mat3 m;
  for (int i = 0; i < 9; ++i) m.e[i] = OInt::from_knum(parse_knum(entries[i]));
  return m;
}

std::vector<Generator> build_generators() {
  Mat3 a1 = parse_rows({"0", "0", "1", "0", "-1", "0", "1", "0", "0"});
  Mat3 a2 = parse_rows({"2", "-tau", "1-3tau", "taubar", "0", "-2-tau", "-tau", "-1", "-3+tau"});
  Mat3 a6 = parse_rows({"isqrt7", "0", "4", "0", "1", "0", "2", "0", "-isqrt7"});
  Mat3 a7 = parse_rows({"-taubar", "1", "1", "tau", "0", "1", "2", "taubar", "-tau"});
  Mat3 a8 = parse_rows({"1", "2-tau", "-2", "-1-tau", "-3", "1+tau", "-2", "-2+tau", "1"});
  Mat3 a9 = parse_rows({"-1", "0", "isqrt7", "0", "1", "0", "isqrt7", "0", "6"});
  Mat3 a10 = parse_rows({"-2", "0", "isqrt7", "0", "1", "0", "isqrt7", "0", "3"});
  Mat3 a12 = parse_rows({"-4", "0", "3isqrt7", "0", "1", "0", "isqrt7", "0", "5"});
  Mat3 a3 = a2.unitary_inverse();
  Mat3 a4 = a2.pow(-2);
  Mat3 a5 = a4.unitary_inverse();
  Mat3 a11 = a10.unitary_inverse();
  Mat3 a13 = a12.unitary_inverse();
  Mat3 a14 = a9.unitary_inverse();
  const Mat3 mats[14] = {a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14};
  std::vector<Generator> out;
  for (int i = 0; i < 14; ++i) {
    std::string name = "A" + std::to_string(i + 1);
    out.push_back({name, GroupElt(mats[i], name), -1});
  }
  for (int i = 0; i < 14; ++i) {
    GroupElt inv = out[i].elt.inverse();
    for (int k = 0; k < 14; ++k) {
      if (out[k].elt == inv) out[i].inverse = k;
    }
    if (out[i].inverse < 0) throw std::logic_error("generator table not closed under inverses");
  }
  return out;
}

const Rat& sqrt7_lower() {
  static const Rat v(26457, 10000);
  return v;
}

Rat inner_re(const KNum& x, const KNum& y) { return (x * y.conj()).re(); }

// Squared Euclidean distance from z to the triangle with vertices 0, 1, tau.
Rat dist2_to_triangle(const KNum& z) {
  if (sgn(z.a) >= 0 && sgn(z.b) >= 0 && z.a + z.b <= 1) return Rat(0);
  const KNum verts[3] = {KNum(0), KNum(1), KNum::tau()};
  Rat best = -1;
  for (int i = 0; i < 3; ++i) {
    const KNum& p = verts[i];
    const KNum& q = verts[(i + 1) % 3];
    KNum d = q - p;
    Rat t = inner_re(z - p, d) / d.norm();
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    KNum foot = p + KNum(t) * d;
    Rat dist = (z - foot).norm();
    if (sgn(best) < 0 || dist < best) best = dist;
  }
  return best;
}

std::int64_t ceil_div2(const Rat& x) {
  // smallest integer l with 2l >= x
  Int f = floor(Rat(-x / 2));
  return -f.get_si();
}

std::int64_t floor_div2(const Rat& x) { return floor(Rat(x / 2)).get_si(); }

}  // namespace

// Smallest k/1024 whose 4th power (or square) bounds x from above.
Rat root_upper_bound(const Rat& x, int power) {
  long k = 0;
  for (;;) {
    Rat q(k, 1024);
    Rat p = power == 4 ? Rat(q * q * q * q) : Rat(q * q);
    if (p >= x) return q;
    ++k;
  }
}

const std::vector<Generator>& generator_table() {
  static const std::vector<Generator> table = build_generators();
  return table;
}

IsomSphere IsomSphere::of(const GroupElt& g) {
  const Mat3& m = g.matrix();
  if (CuspElt::fixes_infinity(m)) throw InvalidArgument("isometric sphere undefined for the cusp group");
  Vec3O col = m.column(0);
  IsomSphere s;
  s.elt = g;
  HoroCoords h = horo_coords(to_k(col));
  s.center = {h.z, h.s};
  s.a31norm = col[2].norm();
  s.r4 = Rat(4) / Rat(s.a31norm);
  return s;
}

double IsomSphere::radius() const { return std::sqrt(2.0 / std::sqrt(static_cast<double>(a31norm))); }
double IsomSphere::radius_alt() const { return std::sqrt(2.0 / static_cast<double>(a31norm)); }

Rat cygan_dist4(const HoroCoords& p, const HoroCoords& q) {
  Rat horiz = (p.z - q.z).norm() + abs(p.u - q.u);
  Rat ds = p.s - q.s + tau_coef(p.z * q.z.conj());
  return horiz * horiz + 7 * ds * ds;
}

std::string to_string(Side s) {
  switch (s) {
    case Side::inside: return "inside";
    case Side::boundary: return "boundary";
    case Side::outside: return "outside";
  }
  return "?";
}

namespace {

Side side_from(const FNum& nx3, const FNum& nc) {
  int c = (nc - nx3).real_sign();
  return c > 0 ? Side::inside : (c == 0 ? Side::boundary : Side::outside);
}

FNum fnorm(const FNum& x) { return x * x.conj(); }

}  // namespace

Side ford_side(const Vec3F& x, const GroupElt& g) {
  if (CuspElt::fixes_infinity(g.matrix())) throw InvalidArgument("ford_side needs an element outside the cusp group");
  Vec3F c = to_f(g.matrix().column(0));
  return side_from(fnorm(x[2]), fnorm(herm_inner(x, c)));
}

Side sphere_membership(const HoroCoords& h, const IsomSphere& s) {
  Rat d4 = cygan_dist4(h, HoroCoords{s.center.z, s.center.s, Rat(0)});
  int c = cmp(d4, s.r4);
  return c > 0 ? Side::inside : (c == 0 ? Side::boundary : Side::outside);
}

std::vector<CuspElt> enumerate_cone_translates(int j) {
  const auto& gens = generator_table();
  if (j < 1 || j > static_cast<int>(gens.size())) throw InvalidArgument("generator index out of range");
  IsomSphere base = IsomSphere::of(gens[j - 1].elt);
  Rat r_ub = root_upper_bound(base.r4, 4);
  constexpr std::int64_t kBox = 6;
  std::vector<CuspElt> out;
  for (std::int64_t m = -kBox; m <= kBox; ++m) {
    for (std::int64_t n = -kBox; n <= kBox; ++n) {
      for (int eps = 0; eps <= 1; ++eps) {
        CuspElt a0{m, n, eps, 0};
        HeisPt c = a0.act(base.center);
        Rat d2 = dist2_to_triangle(c.z);
        if (d2 * d2 > base.r4) continue;
        Rat c_ub = root_upper_bound(c.z.norm(), 2);
        Rat X = (r_ub * r_ub + 2 * r_ub * c_ub) / sqrt7_lower();
        // s(l) = c.s + 2l must meet [-X, 2 + X]
        std::int64_t lo = ceil_div2(Rat(-X - c.s));
        std::int64_t hi = floor_div2(Rat(2 + X - c.s));
        if (lo > hi) continue;
        if (std::abs(m) == kBox || std::abs(n) == kBox) throw std::logic_error("cone translate box too small");
        for (std::int64_t l = lo; l <= hi; ++l) out.push_back(CuspElt{m, n, eps, l});
      }
    }
  }
  return out;
}

std::string CatalogSphere::label() const {
  const auto& [a, j] = aliases.front();
  std::string w = a.word();
  std::string s = "I(A" + std::to_string(j + 1) + ")";
  return w == "Id" ? s : w + " " + s;
}

const std::vector<CatalogSphere>& sphere_catalog() {
  static const std::vector<CatalogSphere> catalog = [] {
    std::vector<CatalogSphere> out;
    std::map<Vec3O, std::size_t> index;
    const auto& gens = generator_table();
    for (int j = 1; j <= static_cast<int>(gens.size()); ++j) {
      for (const CuspElt& a : enumerate_cone_translates(j)) {
        GroupElt g = a.to_group() * gens[j - 1].elt;
        Vec3O col = canonical_sign(g.matrix().column(0));
        auto it = index.find(col);
        if (it != index.end()) {
          out[it->second].aliases.emplace_back(a, j - 1);
          continue;
        }
        index.emplace(col, out.size());
        CatalogSphere cs{IsomSphere::of(g), col, {{a, j - 1}}};
        out.push_back(std::move(cs));
      }
    }
    return out;
  }();
  return catalog;
}

std::vector<SphereHit> spheres_containing(const Vec3F& x) {
  std::vector<SphereHit> out;
  FNum nx3 = fnorm(x[2]);
  for (const auto& cs : sphere_catalog()) {
    Side s = side_from(nx3, fnorm(herm_inner(x, to_f(cs.column))));
    if (s != Side::inside) out.push_back({&cs, s});
  }
  return out;
}

std::optional<Vec3O> null_vector_of_depth(std::int64_t d) {
  if (d < 1) throw InvalidArgument("depth must be positive");
  // N(a + b tau) = a^2 + ab + 2b^2 >= 7b^2/4
  std::int64_t bmax = 1;
  while (7 * bmax * bmax <= 4 * d) ++bmax;
  std::int64_t amax = 1;
  while (amax * amax <= 4 * d) ++amax;
  for (std::int64_t b3 = -bmax; b3 <= bmax; ++b3) {
    for (std::int64_t a3 = -amax; a3 <= amax; ++a3) {
      OInt v3(a3, b3);
      if (v3.norm() != d) continue;
      OInt c3 = v3.conj();
      for (std::int64_t p = 0; p < d; ++p) {
        for (std::int64_t q = 0; q < d; ++q) {
          OInt v2(p, q);
          std::int64_t n2 = v2.norm();
          // v1 conj(v3) = x = a + b tau with 2a + b = -N(v2)
          for (std::int64_t b = -2 * d; b <= 2 * d; ++b) {
            if ((n2 + b) % 2 != 0) continue;
            OInt x((-n2 - b) / 2, b);
            if (!o_divides(c3, x)) continue;
            OInt v1 = o_exact_div(x, c3);
            OInt g = v3;
            for (const OInt& c : {v1, v2}) {
              if (!c.is_zero()) g = o_gcd(g, c);
            }
            if (!g.is_unit()) continue;
            Vec3O v{v1, v2, v3};
            if (herm_inner(v, v).is_zero()) return v;
          }
        }
      }
    }
  }
  return std::nullopt;
}

FNum height(const Vec3F& x) { return -herm_inner(x, x) / fnorm(x[2]); }

bool in_omega(const Vec3F& x) {
  HoroAlg h = horo_coords(x);
  if (prism_membership(HeisAlg{h.z, h.s}).location == PrismMembership::Outside) return false;
  for (const auto& hit : spheres_containing(x)) {
    if (hit.side == Side::outside) return false;
  }
  return true;
}

DomainReduction reduce_to_domain(const Vec3F& x0, int max_iters) {
  if (herm_inner(x0, x0).real_sign() >= 0) throw InvalidArgument("reduce_to_domain needs a negative point");
  DomainReduction r{GroupElt(), x0, 0};
  for (int it = 0; it < max_iters; ++it) {
    HoroAlg h = horo_coords(r.point);
    CuspElt a = prism_reducer(HeisAlg{h.z, h.s});
    if (a != CuspElt{}) {
      r.elt = a.to_group() * r.elt;
      r.point = a.to_matrix().apply(r.point);
    }
    // Most violated sphere: largest N(x3)/N(<x,c>).
    FNum nx3 = fnorm(r.point[2]);
    const CatalogSphere* best = nullptr;
    FNum best_nc;
    for (const auto& cs : sphere_catalog()) {
      FNum nc = fnorm(herm_inner(r.point, to_f(cs.column)));
      if ((nx3 - nc).real_sign() <= 0) continue;
      // nx3/nc > nx3/best_nc  iff  nc < best_nc
      if (best == nullptr || (nc - best_nc).real_sign() < 0) {
        best = &cs;
        best_nc = nc;
      }
    }
    if (best == nullptr) return r;
    FNum before = height(r.point);
    GroupElt inv = best->sphere.elt.inverse();
    r.elt = inv * r.elt;
    r.point = inv.matrix().apply(r.point);
    ++r.steps;
    if ((height(r.point) - before).real_sign() <= 0) {
      throw std::logic_error("reduction step did not increase the height");
    }
  }
  throw CapExceeded("reduce_to_domain exceeded the iteration cap", max_iters);
}

}  // namespace picard
