#pragma once

// Exact arithmetic in K = Q(tau), tau = (1 + i*sqrt7)/2, tau^2 = tau - 2,
// and in its ring of integers O = Z[tau].

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace picard {

using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);
std::string to_string(const Rat& q);
Int floor(const Rat& q);

// a + b*tau with a, b rational.
struct KNum {
  Rat a, b;

  KNum() : a(0), b(0) {}
  KNum(long x) : a(x), b(0) {}  // NOLINT(google-explicit-constructor)
  KNum(Rat x) : a(std::move(x)), b(0) {}  // NOLINT(google-explicit-constructor)
  KNum(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

  static KNum tau() { return {Rat(0), Rat(1)}; }
  static KNum taubar() { return {Rat(1), Rat(-1)}; }
  static KNum isqrt7() { return {Rat(-1), Rat(2)}; }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool is_rational() const { return sgn(b) == 0; }
  bool is_integral() const;

  KNum conj() const { return {a + b, -b}; }
  Rat norm() const { return a * a + a * b + 2 * b * b; }
  Rat re() const { return a + b / 2; }
  // Imaginary part is im_sqrt7() * sqrt7.
  Rat im_sqrt7() const { return b / 2; }
  KNum inv() const;

  KNum operator-() const { return {-a, -b}; }
  KNum& operator+=(const KNum& o);
  KNum& operator-=(const KNum& o);
  KNum& operator*=(const KNum& o);
  KNum& operator/=(const KNum& o);

  friend bool operator==(const KNum& x, const KNum& y) { return x.a == y.a && x.b == y.b; }
  friend std::strong_ordering operator<=>(const KNum& x, const KNum& y);
};

KNum operator+(KNum x, const KNum& y);
KNum operator-(KNum x, const KNum& y);
KNum operator*(const KNum& x, const KNum& y);
KNum operator/(const KNum& x, const KNum& y);

// Sign in the lexicographic order on (a, b).
int ring_sign(const KNum& x);
std::string to_string(const KNum& x);
KNum parse_knum(const std::string& text);

// tau-coefficient b; for x = z*conj(w) this is 2*Im(x)/sqrt7.
Rat tau_coef(const KNum& x);

// Integral element a + b*tau with overflow-checked 64-bit coefficients.
struct OInt {
  std::int64_t a = 0, b = 0;

  constexpr OInt() = default;
  constexpr OInt(std::int64_t x) : a(x), b(0) {}  // NOLINT(google-explicit-constructor)
  constexpr OInt(std::int64_t x, std::int64_t y) : a(x), b(y) {}

  static constexpr OInt tau() { return {0, 1}; }
  static constexpr OInt taubar() { return {1, -1}; }
  static constexpr OInt isqrt7() { return {-1, 2}; }

  bool is_zero() const { return a == 0 && b == 0; }
  OInt conj() const;
  std::int64_t norm() const;
  bool is_unit() const { return (a == 1 || a == -1) && b == 0; }

  OInt operator-() const;
  OInt& operator+=(const OInt& o);
  OInt& operator-=(const OInt& o);
  OInt& operator*=(const OInt& o);

  KNum to_knum() const { return {Rat(a), Rat(b)}; }
  static OInt from_knum(const KNum& x);  // throws unless integral

  friend bool operator==(const OInt&, const OInt&) = default;
  friend auto operator<=>(const OInt&, const OInt&) = default;
};

OInt operator+(OInt x, const OInt& y);
OInt operator-(OInt x, const OInt& y);
OInt operator*(OInt x, const OInt& y);

int ring_sign(const OInt& x);
std::string to_string(const OInt& x);

// Division with remainder: x = q*y + r with N(r) < N(y).
struct DivMod {
  OInt q, r;
};
DivMod o_divmod(const OInt& x, const OInt& y);
bool o_divides(const OInt& d, const OInt& x);
// Exact quotient; throws if d does not divide x.
OInt o_exact_div(const OInt& x, const OInt& d);
// Sign-normalized generator of the ideal (x, y).
OInt o_gcd(const OInt& x, const OInt& y);

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_sub(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

}  // namespace picard

template <>
struct std::hash<picard::OInt> {
  std::size_t operator()(const picard::OInt& x) const noexcept {
    return std::hash<std::int64_t>()(x.a) * 1000003u ^ std::hash<std::int64_t>()(x.b);
  }
};
