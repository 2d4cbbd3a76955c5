#include "picard/hermitian.hpp"

#include <sstream>

#include "picard/errors.hpp"

namespace picard {

KNum herm_inner(const Vec3K& v, const Vec3K& w) {
  return w[0].conj() * v[2] + w[1].conj() * v[1] + w[2].conj() * v[0];
}

OInt herm_inner(const Vec3O& v, const Vec3O& w) {
  return w[0].conj() * v[2] + w[1].conj() * v[1] + w[2].conj() * v[0];
}

std::int64_t square_norm(const Vec3O& v) { return herm_inner(v, v).a; }

FNum herm_inner(const Vec3F& v, const Vec3F& w) {
  return w[0].conj() * v[2] + w[1].conj() * v[1] + w[2].conj() * v[0];
}

Vec3K to_k(const Vec3O& v) { return {v[0].to_knum(), v[1].to_knum(), v[2].to_knum()}; }
Vec3F to_f(const Vec3K& v) { return {FNum(v[0]), FNum(v[1]), FNum(v[2])}; }
Vec3F to_f(const Vec3O& v) { return to_f(to_k(v)); }

bool proportional(const Vec3K& v, const Vec3K& w) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(v[i] * w[j] - v[j] * w[i]).is_zero()) return false;
    }
  }
  return true;
}

bool proportional(const Vec3F& v, const Vec3F& w) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(v[i] * w[j] - v[j] * w[i]).is_zero()) return false;
    }
  }
  return true;
}

Vec3O canonical_sign(Vec3O v) {
  for (const auto& x : v) {
    int s = ring_sign(x);
    if (s == 0) continue;
    if (s < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

Vec3O primitive_rep(const Vec3K& v) {
  Int den = 1;
  bool nonzero = false;
  for (const auto& x : v) {
    if (!x.is_zero()) nonzero = true;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.a.get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.b.get_den_mpz_t());
  }
  if (!nonzero) throw InvalidArgument("zero vector has no projective class");
  Vec3O w;
  for (int i = 0; i < 3; ++i) w[i] = OInt::from_knum(v[i] * KNum(Rat(den)));
  OInt g = 0;
  for (const auto& x : w) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x : o_gcd(g, x);
  }
  for (auto& x : w) x = o_exact_div(x, g);
  return canonical_sign(w);
}

bool is_primitive(const Vec3O& v) {
  OInt g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x : o_gcd(g, x);
  }
  return g.is_unit();
}

std::int64_t depth(const Vec3K& v) {
  Vec3O p = primitive_rep(v);
  if (p[2].is_zero()) throw InvalidArgument("depth undefined at the point at infinity");
  return p[2].norm();
}

std::string to_string(const Vec3O& v) {
  return "[" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + "]";
}

std::string to_string(const Vec3K& v) {
  return "[" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + "]";
}

std::string to_string(const Vec3F& v) {
  return "[" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + "]";
}

// ---- Mat3

Mat3 Mat3::identity() { return from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
Mat3 Mat3::J() { return from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }

Mat3 Mat3::from_rows(std::initializer_list<std::initializer_list<OInt>> rows) {
  if (rows.size() != 3) throw InvalidArgument("matrix needs 3 rows");
  Mat3 m;
  int i = 0;
  for (const auto& r : rows) {
    if (r.size() != 3) throw InvalidArgument("matrix row needs 3 entries");
    int j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

Mat3 Mat3::operator-() const {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.e[i] = -e[i];
  return r;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      OInt s = 0;
      for (int k = 0; k < 3; ++k) {
        if (!x(i, k).is_zero() && !y(k, j).is_zero()) s += x(i, k) * y(k, j);
      }
      r(i, j) = s;
    }
  }
  return r;
}

Mat3 Mat3::conj_transpose() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i).conj();
  }
  return r;
}

Mat3 Mat3::unitary_inverse() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(2 - j, 2 - i).conj();
  }
  return r;
}

Mat3 Mat3::pow(long n) const {
  Mat3 base = n < 0 ? unitary_inverse() : *this;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Mat3 r = identity();
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

bool Mat3::is_unitary() const { return conj_transpose() * J() * (*this) == J(); }

bool Mat3::is_scalar() const {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return (*this)(0, 0) == (*this)(1, 1) && (*this)(1, 1) == (*this)(2, 2);
}

bool Mat3::is_pm_identity() const { return is_scalar() && (*this)(0, 0).is_unit(); }

OInt Mat3::trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

Vec3O Mat3::column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

Vec3O Mat3::apply(const Vec3O& v) const {
  Vec3O r;
  for (int i = 0; i < 3; ++i) r[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
  return r;
}

Vec3K Mat3::apply(const Vec3K& v) const {
  Vec3K r;
  for (int i = 0; i < 3; ++i) {
    r[i] = (*this)(i, 0).to_knum() * v[0] + (*this)(i, 1).to_knum() * v[1] + (*this)(i, 2).to_knum() * v[2];
  }
  return r;
}

Vec3F Mat3::apply(const Vec3F& v) const {
  Vec3F r;
  for (int i = 0; i < 3; ++i) {
    r[i] = FNum((*this)(i, 0).to_knum()) * v[0] + FNum((*this)(i, 1).to_knum()) * v[1] +
           FNum((*this)(i, 2).to_knum()) * v[2];
  }
  return r;
}

std::string Mat3::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << picard::to_string((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

MatK to_k(const Mat3& m) {
  MatK r;
  for (int i = 0; i < 9; ++i) r[i] = m.e[i].to_knum();
  return r;
}

bool is_in_gamma(const MatK& m) {
  for (const auto& x : m) {
    if (!x.is_integral()) return false;
  }
  // M* J M = J
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      KNum s;
      for (int k = 0; k < 3; ++k) s += m[3 * k + i].conj() * m[3 * (2 - k) + j];
      if (s != KNum(i + j == 2 ? 1 : 0)) return false;
    }
  }
  return true;
}

Mat3 to_o(const MatK& m) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.e[i] = OInt::from_knum(m[i]);
  return r;
}

// ---- GroupElt

Mat3 GroupElt::canonical(const Mat3& m) {
  for (const auto& x : m.e) {
    int s = ring_sign(x);
    if (s != 0) return s > 0 ? m : -m;
  }
  throw InvalidArgument("zero matrix");
}

GroupElt::GroupElt(const Mat3& m, std::string word) : m_(canonical(m)), word_(std::move(word)) {}

GroupElt GroupElt::inverse() const { return GroupElt(m_.unitary_inverse()); }

GroupElt GroupElt::pow(long n) const { return GroupElt(m_.pow(n)); }

GroupElt operator*(const GroupElt& x, const GroupElt& y) { return GroupElt(x.m_ * y.m_); }

// ---- ProjPoint

ProjPoint::ProjPoint(const Vec3F& v) {
  int last = -1;
  for (int i = 2; i >= 0; --i) {
    if (!v[i].is_zero()) {
      last = i;
      break;
    }
  }
  if (last < 0) throw InvalidArgument("zero vector has no projective class");
  FNum inv = v[last].inv();
  Vec3F w{v[0] * inv, v[1] * inv, v[2] * inv};
  if (w[0].in_base() && w[1].in_base() && w[2].in_base()) {
    rational_ = primitive_rep({w[0].base_value(), w[1].base_value(), w[2].base_value()});
    v_ = to_f(*rational_);
  } else {
    v_ = w;
  }
}

const Vec3O& ProjPoint::rational() const {
  if (!rational_) throw InvalidArgument("point is not K-rational");
  return *rational_;
}

std::optional<std::int64_t> ProjPoint::rational_norm() const {
  if (!rational_) return std::nullopt;
  return square_norm(*rational_);
}

bool operator==(const ProjPoint& x, const ProjPoint& y) {
  if (x.rational_ || y.rational_) return x.rational_ == y.rational_;
  if (x.field() == y.field()) {
    for (int i = 0; i < 3; ++i) {
      if (!(x.v_[i] - y.v_[i]).is_zero()) return false;
    }
    return true;
  }
  // Different presentations of possibly the same field: separate numerically.
  for (int i = 0; i < 3; ++i) {
    CBall a = x.v_[i].enclose(256), b = y.v_[i].enclose(256);
    if ((a.re - b.re).certain_sign() != 0 || (a.im - b.im).certain_sign() != 0) return false;
  }
  throw InvalidArgument("cannot decide equality of points in different number fields");
}

std::string ProjPoint::to_string() const {
  if (rational_) return picard::to_string(*rational_);
  return picard::to_string(v_);
}

ProjPoint apply(const GroupElt& g, const ProjPoint& p) { return ProjPoint(g.matrix().apply(p.coords())); }

// ---- horospherical coordinates

HoroCoords horo_coords(const Vec3K& v) {
  if (v[2].is_zero()) throw InvalidArgument("horospherical coordinates need v3 != 0");
  KNum z = v[1] / v[2];
  KNum w = KNum(2) * v[0] / v[2] + KNum(z.norm());
  // w = it - u with t = s*sqrt7
  return {z, w.b / 2, -w.re()};
}

HoroAlg horo_coords(const Vec3F& v) {
  if (v[2].is_zero()) throw InvalidArgument("horospherical coordinates need v3 != 0");
  FNum z = v[1] / v[2];
  FNum w = FNum(2) * v[0] / v[2] + z * z.conj();
  FNum s = (w - w.conj()) / FNum(KNum(2) * KNum::isqrt7());
  FNum u = -(w + w.conj()) / FNum(2);
  return {z, s, u};
}

Vec3K lift(const HoroCoords& h) {
  KNum first = (KNum(-h.z.norm() - h.u) + KNum(h.s) * KNum::isqrt7()) / KNum(2);
  return {first, h.z, KNum(1)};
}

Rat dist_invariant(const Vec3K& p, const Vec3K& q) {
  Rat np = herm_inner(p, p).a, nq = herm_inner(q, q).a;
  if (sgn(np) >= 0 || sgn(nq) >= 0) throw InvalidArgument("distance needs negative vectors");
  return herm_inner(p, q).norm() / (np * nq);
}

Mat3 make_reflection(const Vec3O& v) {
  std::int64_t n = square_norm(v);
  if (n != 1 && n != 2) throw InvalidArgument("not integral for this form: <v,v> must be 1 or 2");
  MatK m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // (v v* J)_{ij} = v_i conj(v_{2-j})
      KNum x = v[i].to_knum() * v[2 - j].to_knum().conj() * KNum(rat(2, n));
      m[3 * i + j] = KNum(i == j ? 1 : 0) - x;
    }
  }
  return to_o(m);
}

}  // namespace picard
