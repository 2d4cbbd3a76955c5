#include "picard/numeric.hpp"

#include <algorithm>

namespace picard {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

void abs_times_ulp(mpfr_t out, const mpfr_t x) {
  // out = |x| * 2^-prec(x), rounded up
  mpfr_abs(out, x, MPFR_RNDU);
  mpfr_mul_2si(out, out, -static_cast<long>(mpfr_get_prec(x)), MPFR_RNDU);
}

}  // namespace

RBall::RBall(mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

RBall::RBall(const RBall& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

RBall::RBall(RBall&& o) noexcept : RBall(mpfr_get_prec(o.mid_)) {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

RBall& RBall::operator=(const RBall& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

RBall& RBall::operator=(RBall&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

RBall::~RBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void RBall::add_rounding_error() {
  mpfr_t e;
  mpfr_init2(e, kRadPrec);
  abs_times_ulp(e, mid_);
  mpfr_add(rad_, rad_, e, MPFR_RNDU);
  mpfr_clear(e);
}

RBall RBall::from_rat(const Rat& q, mpfr_prec_t prec) {
  RBall r(prec);
  mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN);
  r.add_rounding_error();
  return r;
}

RBall RBall::sqrt7(mpfr_prec_t prec) {
  RBall r(prec);
  mpfr_sqrt_ui(r.mid_, 7, MPFR_RNDN);
  r.add_rounding_error();
  return r;
}

RBall RBall::cos_2pi(long k, long m, mpfr_prec_t prec) {
  RBall r(prec);
  mpfr_t x;
  mpfr_init2(x, prec + 32);
  mpfr_const_pi(x, MPFR_RNDN);
  mpfr_mul_si(x, x, 2 * k, MPFR_RNDN);
  mpfr_div_si(x, x, m, MPFR_RNDN);
  mpfr_cos(x, x, MPFR_RNDN);
  mpfr_set(r.mid_, x, MPFR_RNDN);
  mpfr_set_ui_2exp(r.rad_, 32, -static_cast<long>(prec), MPFR_RNDU);
  mpfr_clear(x);
  return r;
}

RBall RBall::sin_2pi(long k, long m, mpfr_prec_t prec) {
  RBall r(prec);
  mpfr_t x;
  mpfr_init2(x, prec + 32);
  mpfr_const_pi(x, MPFR_RNDN);
  mpfr_mul_si(x, x, 2 * k, MPFR_RNDN);
  mpfr_div_si(x, x, m, MPFR_RNDN);
  mpfr_sin(x, x, MPFR_RNDN);
  mpfr_set(r.mid_, x, MPFR_RNDN);
  mpfr_set_ui_2exp(r.rad_, 32, -static_cast<long>(prec), MPFR_RNDU);
  mpfr_clear(x);
  return r;
}

RBall operator+(const RBall& x, const RBall& y) {
  RBall r(std::max(x.prec(), y.prec()));
  mpfr_add(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, x.rad_, y.rad_, MPFR_RNDU);
  r.add_rounding_error();
  return r;
}

RBall RBall::operator-() const {
  RBall r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

RBall operator-(const RBall& x, const RBall& y) { return x + (-y); }

RBall operator*(const RBall& x, const RBall& y) {
  RBall r(std::max(x.prec(), y.prec()));
  mpfr_mul(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  mpfr_t t;
  mpfr_init2(t, kRadPrec);
  mpfr_abs(t, x.mid_, MPFR_RNDU);
  mpfr_mul(r.rad_, t, y.rad_, MPFR_RNDU);
  mpfr_abs(t, y.mid_, MPFR_RNDU);
  mpfr_mul(t, t, x.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
  mpfr_mul(t, x.rad_, y.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, t, MPFR_RNDU);
  mpfr_clear(t);
  r.add_rounding_error();
  return r;
}

int RBall::certain_sign() const {
  if (mpfr_cmpabs(mid_, rad_) > 0) return mpfr_sgn(mid_);
  return 0;
}

bool RBall::certain_floor(Int& out) const {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec() + 8);
  mpfr_init2(hi, prec() + 8);
  mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
  mpfr_add(hi, mid_, rad_, MPFR_RNDU);
  Int a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDD);
  mpfr_clear(lo);
  mpfr_clear(hi);
  if (a != b) return false;
  out = a;
  return true;
}

double RBall::to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

std::string RBall::to_string() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.20Rg +/- %.3Rg", mid_, rad_);
  return buf;
}

CBall CBall::from_knum(const KNum& x, mpfr_prec_t prec) {
  return {RBall::from_rat(x.re(), prec), RBall::from_rat(x.im_sqrt7(), prec) * RBall::sqrt7(prec)};
}

CBall CBall::root_of_unity(long k, long m, mpfr_prec_t prec) {
  return {RBall::cos_2pi(k, m, prec), RBall::sin_2pi(k, m, prec)};
}

CBall operator+(const CBall& x, const CBall& y) { return {x.re + y.re, x.im + y.im}; }

CBall operator*(const CBall& x, const CBall& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

std::string CBall::to_string() const { return "(" + re.to_string() + ") + i(" + im.to_string() + ")"; }

}  // namespace picard
