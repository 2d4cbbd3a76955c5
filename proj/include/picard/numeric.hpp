#pragma once

// Midpoint-radius real and complex balls on top of MPFR. Radii are always
// rounded upward, so a ball contains every value it was derived from.

#include <mpfr.h>

#include <string>

#include "picard/ring.hpp"

namespace picard {

class RBall {
 public:
  explicit RBall(mpfr_prec_t prec);
  RBall(const RBall& o);
  RBall(RBall&& o) noexcept;
  RBall& operator=(const RBall& o);
  RBall& operator=(RBall&& o) noexcept;
  ~RBall();

  static RBall from_rat(const Rat& q, mpfr_prec_t prec);
  static RBall sqrt7(mpfr_prec_t prec);
  // cos(2*pi*k/m) and sin(2*pi*k/m).
  static RBall cos_2pi(long k, long m, mpfr_prec_t prec);
  static RBall sin_2pi(long k, long m, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }

  friend RBall operator+(const RBall& x, const RBall& y);
  friend RBall operator-(const RBall& x, const RBall& y);
  friend RBall operator*(const RBall& x, const RBall& y);
  RBall operator-() const;

  // +1 / -1 when the ball excludes zero, 0 when undecided.
  int certain_sign() const;
  bool contains_zero() const { return certain_sign() == 0; }
  // Floor of every point of the ball if they agree.
  bool certain_floor(Int& out) const;
  double to_double() const;
  std::string to_string() const;

 private:
  mpfr_t mid_;
  mpfr_t rad_;
  void add_rounding_error();
};

struct CBall {
  RBall re, im;
  explicit CBall(mpfr_prec_t prec) : re(prec), im(prec) {}
  CBall(RBall r, RBall i) : re(std::move(r)), im(std::move(i)) {}

  static CBall from_knum(const KNum& x, mpfr_prec_t prec);
  static CBall root_of_unity(long k, long m, mpfr_prec_t prec);

  friend CBall operator+(const CBall& x, const CBall& y);
  friend CBall operator*(const CBall& x, const CBall& y);
  std::string to_string() const;
};

}  // namespace picard
