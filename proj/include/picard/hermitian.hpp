#pragma once

// The Hermitian form <v,w> = w* J v with J antidiagonal, integral matrices in
// U(J), projective points and horospherical coordinates.

#include <array>
#include <optional>
#include <string>

#include "picard/field.hpp"
#include "picard/ring.hpp"

namespace picard {

using Vec3K = std::array<KNum, 3>;
using Vec3O = std::array<OInt, 3>;
using Vec3F = std::array<FNum, 3>;

KNum herm_inner(const Vec3K& v, const Vec3K& w);
OInt herm_inner(const Vec3O& v, const Vec3O& w);
std::int64_t square_norm(const Vec3O& v);
FNum herm_inner(const Vec3F& v, const Vec3F& w);

Vec3K to_k(const Vec3O& v);
Vec3F to_f(const Vec3K& v);
Vec3F to_f(const Vec3O& v);
bool proportional(const Vec3K& v, const Vec3K& w);
bool proportional(const Vec3F& v, const Vec3F& w);

// Primitive integral representative with canonical sign.
Vec3O primitive_rep(const Vec3K& v);
Vec3O canonical_sign(Vec3O v);
bool is_primitive(const Vec3O& v);

// N(v3) of the primitive representative of a null point other than (1,0,0).
std::int64_t depth(const Vec3K& v);

std::string to_string(const Vec3O& v);
std::string to_string(const Vec3K& v);
std::string to_string(const Vec3F& v);

// 3x3 matrix over O, row-major.
struct Mat3 {
  std::array<OInt, 9> e{};

  static Mat3 identity();
  static Mat3 J();
  static Mat3 from_rows(std::initializer_list<std::initializer_list<OInt>> rows);

  OInt& operator()(int i, int j) { return e[3 * i + j]; }
  const OInt& operator()(int i, int j) const { return e[3 * i + j]; }

  Mat3 operator-() const;
  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  friend bool operator==(const Mat3&, const Mat3&) = default;
  friend auto operator<=>(const Mat3&, const Mat3&) = default;

  // Inverse for matrices in U(J): J M* J.
  Mat3 unitary_inverse() const;
  Mat3 conj_transpose() const;
  Mat3 pow(long n) const;  // n may be negative
  bool is_unitary() const;
  bool is_scalar() const;     // lambda * Id
  bool is_pm_identity() const;
  OInt trace() const;
  Vec3O column(int j) const;

  Vec3O apply(const Vec3O& v) const;
  Vec3K apply(const Vec3K& v) const;
  Vec3F apply(const Vec3F& v) const;

  std::string to_string() const;
};

// 3x3 matrix over K, used for membership tests and intermediate constructions.
using MatK = std::array<KNum, 9>;
MatK to_k(const Mat3& m);
bool is_in_gamma(const MatK& m);
Mat3 to_o(const MatK& m);  // throws unless integral

// An element of PU(J, O7): the sign-canonical representative of {M, -M}.
class GroupElt {
 public:
  GroupElt() : m_(Mat3::identity()) {}
  explicit GroupElt(const Mat3& m, std::string word = {});

  static Mat3 canonical(const Mat3& m);

  const Mat3& matrix() const { return m_; }
  const std::string& word() const { return word_; }
  GroupElt with_word(std::string w) const { return GroupElt(m_, std::move(w)); }
  bool is_identity() const { return m_ == Mat3::identity(); }

  GroupElt inverse() const;
  GroupElt pow(long n) const;
  friend GroupElt operator*(const GroupElt& x, const GroupElt& y);
  friend bool operator==(const GroupElt& x, const GroupElt& y) { return x.m_ == y.m_; }
  friend auto operator<=>(const GroupElt& x, const GroupElt& y) { return x.m_ <=> y.m_; }

 private:
  Mat3 m_;
  std::string word_;
};

// A point of projective space. K-rational points are stored as their
// primitive integral representative; others are scaled so the last nonzero
// coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(const Vec3F& v);
  explicit ProjPoint(const Vec3K& v) : ProjPoint(to_f(v)) {}
  explicit ProjPoint(const Vec3O& v) : ProjPoint(to_f(v)) {}

  const Vec3F& coords() const { return v_; }
  bool is_rational() const { return rational_.has_value(); }
  const Vec3O& rational() const;
  const NumberField* field() const { return v_[0].field(); }
  // Sign of <v,v>.
  int norm_sign() const { return herm_inner(v_, v_).real_sign(); }
  std::optional<std::int64_t> rational_norm() const;

  friend bool operator==(const ProjPoint& x, const ProjPoint& y);
  std::string to_string() const;

 private:
  Vec3F v_;
  std::optional<Vec3O> rational_;
};

ProjPoint apply(const GroupElt& g, const ProjPoint& p);

// Horospherical coordinates with t = s * sqrt7.
struct HoroCoords {
  KNum z;
  Rat s;
  Rat u;
  friend bool operator==(const HoroCoords&, const HoroCoords&) = default;
};

struct HoroAlg {
  FNum z, s, u;
};

HoroCoords horo_coords(const Vec3K& v);
HoroAlg horo_coords(const Vec3F& v);
Vec3K lift(const HoroCoords& h);

// cosh^2(d/2) = |<v,w>|^2 / (<v,v><w,w>) for negative vectors.
Rat dist_invariant(const Vec3K& p, const Vec3K& q);

// Reflection x -> x - 2 <x,v>/<v,v> v for a primitive vector of norm 1 or 2.
Mat3 make_reflection(const Vec3O& v);

}  // namespace picard
