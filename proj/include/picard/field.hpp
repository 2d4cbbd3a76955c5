#pragma once

// Elements of K(lambda) where lambda is a root of unity of degree <= 3 over K.
// The base field K is the degree-1 case, so K-rational and algebraic points
// share one code path.

#include <array>
#include <string>
#include <vector>

#include "picard/numeric.hpp"
#include "picard/ring.hpp"

namespace picard {

struct PrecisionPolicy {
  long start_bits = 128;
  long max_bits = 4096;
};

PrecisionPolicy precision_policy();
void set_precision_policy(PrecisionPolicy p);

class NumberField {
 public:
  static constexpr int kMaxDegree = 3;

  // K itself.
  static const NumberField* base();
  // K[x]/(q) embedded by x -> exp(2*pi*i*k/m). q is monic (low-to-high
  // coefficients), irreducible over K and vanishes at that root of unity.
  // Fields are interned: equal inputs give the same pointer.
  static const NumberField* root_of_unity(const std::vector<KNum>& q, long k, long m);

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<KNum>& modulus() const { return modulus_; }
  long root_k() const { return k_; }
  long root_m() const { return m_; }
  bool is_base() const { return degree() == 1; }
  std::string describe() const;

  // Reduce a polynomial (low-to-high) modulo the defining polynomial.
  std::array<KNum, kMaxDegree> reduce(std::vector<KNum> poly) const;
  const std::array<KNum, kMaxDegree>& lambda_inverse() const { return lambda_inv_; }

 private:
  NumberField(std::vector<KNum> q, long k, long m);
  std::vector<KNum> modulus_;
  long k_, m_;
  std::array<KNum, kMaxDegree> lambda_inv_;
};

// Element sum c[i] * lambda^i of a NumberField.
class FNum {
 public:
  FNum() : f_(NumberField::base()) {}
  FNum(const KNum& x) : f_(NumberField::base()) { c_[0] = x; }  // NOLINT(google-explicit-constructor)
  FNum(long x) : FNum(KNum(x)) {}                                 // NOLINT(google-explicit-constructor)
  FNum(const NumberField* f, std::array<KNum, NumberField::kMaxDegree> c) : f_(f), c_(std::move(c)) {}

  static FNum constant(const NumberField* f, const KNum& x);
  static FNum generator(const NumberField* f);

  const NumberField* field() const { return f_; }
  const std::array<KNum, NumberField::kMaxDegree>& coeffs() const { return c_; }
  bool is_zero() const;
  bool in_base() const;  // lies in K
  KNum base_value() const;  // throws unless in_base()

  FNum conj() const;
  FNum inv() const;
  FNum operator-() const;
  FNum& operator+=(const FNum& o);
  FNum& operator-=(const FNum& o);
  friend FNum operator+(FNum x, const FNum& y) { return x += y; }
  friend FNum operator-(FNum x, const FNum& y) { return x -= y; }
  friend FNum operator*(const FNum& x, const FNum& y);
  friend FNum operator/(const FNum& x, const FNum& y) { return x * y.inv(); }
  friend bool operator==(const FNum& x, const FNum& y);

  CBall enclose(long prec) const;
  // For real elements: exact sign, refining precision as needed.
  int real_sign() const;
  // floor of a real element.
  Int real_floor() const;
  double real_approx() const;
  double imag_approx() const;
  std::string to_string() const;

 private:
  const NumberField* f_;
  std::array<KNum, NumberField::kMaxDegree> c_{};
  static const NumberField* common(const FNum& x, const FNum& y);
};

int compare_real(const FNum& x, const FNum& y);

}  // namespace picard
