#include "picard/ring.hpp"

#include <array>
#include <cctype>
#include <limits>

#include "picard/errors.hpp"

namespace picard {

Rat rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

Int floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("O7 coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw ArithmeticOverflow("O7 coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("O7 coefficient overflow");
  return r;
}

// ---- KNum

bool KNum::is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }

KNum KNum::inv() const {
  Rat n = norm();
  if (sgn(n) == 0) throw InvalidArgument("division by zero in K");
  KNum c = conj();
  return {c.a / n, c.b / n};
}

KNum& KNum::operator+=(const KNum& o) {
  a += o.a;
  b += o.b;
  return *this;
}

KNum& KNum::operator-=(const KNum& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

KNum& KNum::operator*=(const KNum& o) {
  *this = *this * o;
  return *this;
}

KNum& KNum::operator/=(const KNum& o) {
  *this = *this * o.inv();
  return *this;
}

KNum operator+(KNum x, const KNum& y) { return x += y; }
KNum operator-(KNum x, const KNum& y) { return x -= y; }

KNum operator*(const KNum& x, const KNum& y) {
  Rat bd = x.b * y.b;
  return {x.a * y.a - 2 * bd, x.a * y.b + x.b * y.a + bd};
}

KNum operator/(const KNum& x, const KNum& y) { return x * y.inv(); }

std::strong_ordering operator<=>(const KNum& x, const KNum& y) {
  int c = cmp(x.a, y.a);
  if (c == 0) c = cmp(x.b, y.b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

int ring_sign(const KNum& x) {
  int s = sgn(x.a);
  return s != 0 ? s : sgn(x.b);
}

Rat tau_coef(const KNum& x) { return x.b; }

std::string to_string(const KNum& x) {
  if (sgn(x.b) == 0) return to_string(x.a);
  std::string t;
  if (x.b == 1) {
    t = "tau";
  } else if (x.b == -1) {
    t = "-tau";
  } else {
    t = to_string(x.b) + "*tau";
  }
  if (sgn(x.a) == 0) return t;
  if (t[0] != '-') t = "+" + t;
  return to_string(x.a) + t;
}

namespace {

// Recursive descent over + - * / ^, parentheses, rationals and the symbols
// tau, taubar, isqrt7 (alias i7).
class KParser {
 public:
  explicit KParser(const std::string& s) : s_(s) {}

  KNum parse() {
    KNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse K element '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  KNum expr() {
    KNum v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  KNum term() {
    KNum v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        KNum d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        skip();
        // implicit product like "3tau"
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
          v *= unary();
        } else {
          return v;
        }
      }
    }
  }

  KNum unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    KNum base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      long e = std::stol(s_.substr(start, pos_ - start));
      KNum r(1);
      for (long i = 0; i < e; ++i) r *= base;
      if (neg) {
        if (r.is_zero()) fail("division by zero");
        r = r.inv();
      }
      return r;
    }
    return base;
  }

  KNum atom() {
    skip();
    if (eat('(')) {
      KNum v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return KNum(Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "tau" || id == "t") return KNum::tau();
      if (id == "taubar" || id == "tb") return KNum::taubar();
      if (id == "isqrt7" || id == "i7") return KNum::isqrt7();
      fail("unknown symbol '" + id + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

KNum parse_knum(const std::string& text) { return KParser(text).parse(); }

// ---- OInt

OInt OInt::conj() const { return {checked_add(a, b), checked_mul(-1, b)}; }

std::int64_t OInt::norm() const {
  return checked_add(checked_add(checked_mul(a, a), checked_mul(a, b)), checked_mul(2, checked_mul(b, b)));
}

OInt OInt::operator-() const { return {checked_mul(-1, a), checked_mul(-1, b)}; }

OInt& OInt::operator+=(const OInt& o) {
  a = checked_add(a, o.a);
  b = checked_add(b, o.b);
  return *this;
}

OInt& OInt::operator-=(const OInt& o) {
  a = checked_sub(a, o.a);
  b = checked_sub(b, o.b);
  return *this;
}

OInt& OInt::operator*=(const OInt& o) {
  std::int64_t bd = checked_mul(b, o.b);
  std::int64_t na = checked_sub(checked_mul(a, o.a), checked_mul(2, bd));
  std::int64_t nb = checked_add(checked_add(checked_mul(a, o.b), checked_mul(b, o.a)), bd);
  a = na;
  b = nb;
  return *this;
}

OInt operator+(OInt x, const OInt& y) { return x += y; }
OInt operator-(OInt x, const OInt& y) { return x -= y; }
OInt operator*(OInt x, const OInt& y) { return x *= y; }

namespace {

std::int64_t to_i64(const Int& z) {
  if (!z.fits_slong_p()) throw ArithmeticOverflow("O7 coefficient overflow");
  return z.get_si();
}

}  // namespace

OInt OInt::from_knum(const KNum& x) {
  if (!x.is_integral()) throw InvalidArgument("element " + to_string(x) + " is not in O7");
  return {to_i64(x.a.get_num()), to_i64(x.b.get_num())};
}

int ring_sign(const OInt& x) {
  if (x.a != 0) return x.a > 0 ? 1 : -1;
  return x.b > 0 ? 1 : (x.b < 0 ? -1 : 0);
}

std::string to_string(const OInt& x) { return to_string(x.to_knum()); }

DivMod o_divmod(const OInt& x, const OInt& y) {
  if (y.is_zero()) throw InvalidArgument("division by zero in O7");
  KNum q = x.to_knum() / y.to_knum();
  Int fa = floor(q.a), fb = floor(q.b);
  // Nearest lattice point among the corners of the enclosing cell.
  DivMod best;
  bool have = false;
  std::int64_t best_norm = 0;
  for (int da = 0; da <= 1; ++da) {
    for (int db = 0; db <= 1; ++db) {
      OInt cand(to_i64(fa + da), to_i64(fb + db));
      OInt r = x - cand * y;
      std::int64_t n = r.norm();
      if (!have || n < best_norm) {
        best = {cand, r};
        best_norm = n;
        have = true;
      }
    }
  }
  return best;
}

bool o_divides(const OInt& d, const OInt& x) {
  if (d.is_zero()) return x.is_zero();
  return (x.to_knum() / d.to_knum()).is_integral();
}

OInt o_exact_div(const OInt& x, const OInt& d) {
  if (d.is_zero()) throw InvalidArgument("division by zero in O7");
  return OInt::from_knum(x.to_knum() / d.to_knum());
}

OInt o_gcd(const OInt& x, const OInt& y) {
  if (x.is_zero() && y.is_zero()) throw InvalidArgument("gcd undefined");
  OInt p = x, q = y;
  while (!q.is_zero()) {
    OInt r = o_divmod(p, q).r;
    p = q;
    q = r;
  }
  return ring_sign(p) < 0 ? -p : p;
}

}  // namespace picard
