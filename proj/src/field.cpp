#include "picard/field.hpp"

#include <atomic>
#include <numeric>
#include <memory>
#include <mutex>
#include <sstream>

#include "picard/errors.hpp"

namespace picard {

namespace {

std::atomic<long> g_start_bits{128};
std::atomic<long> g_max_bits{4096};

std::mutex g_fields_mu;
std::vector<std::unique_ptr<NumberField>>& field_registry() {
  static std::vector<std::unique_ptr<NumberField>> fields;
  return fields;
}

}  // namespace

PrecisionPolicy precision_policy() { return {g_start_bits.load(), g_max_bits.load()}; }

void set_precision_policy(PrecisionPolicy p) {
  if (p.start_bits < 16 || p.max_bits < p.start_bits) throw InvalidArgument("bad precision policy");
  g_start_bits = p.start_bits;
  g_max_bits = p.max_bits;
}

NumberField::NumberField(std::vector<KNum> q, long k, long m) : modulus_(std::move(q)), k_(k), m_(m) {
  if (degree() == 1) {
    lambda_inv_ = {KNum(1), KNum(0), KNum(0)};
    return;
  }
  // lambda^-1 = lambda^(m-1) since lambda^m = 1
  std::vector<KNum> p(static_cast<std::size_t>(m), KNum(0));
  p.back() = KNum(1);
  lambda_inv_ = reduce(p);
}

const NumberField* NumberField::base() {
  static const NumberField* f = [] {
    std::lock_guard<std::mutex> lock(g_fields_mu);
    field_registry().emplace_back(new NumberField({KNum(0), KNum(1)}, 0, 1));
    return field_registry().back().get();
  }();
  return f;
}

const NumberField* NumberField::root_of_unity(const std::vector<KNum>& q, long k, long m) {
  if (q.size() < 2 || q.size() > kMaxDegree + 1 || q.back() != KNum(1)) {
    throw InvalidArgument("field modulus must be monic of degree 1..3");
  }
  if (q.size() == 2) return base();
  long g = std::gcd(k, m);
  k /= g;
  m /= g;
  base();
  std::lock_guard<std::mutex> lock(g_fields_mu);
  for (const auto& f : field_registry()) {
    if (f->modulus_ == q && f->k_ == k && f->m_ == m) return f.get();
  }
  field_registry().emplace_back(new NumberField(q, k, m));
  return field_registry().back().get();
}

std::string NumberField::describe() const {
  if (is_base()) return "K";
  std::ostringstream os;
  os << "K[x]/(";
  for (int i = degree(); i >= 0; --i) {
    if (modulus_[i].is_zero()) continue;
    if (i != degree()) os << " + ";
    os << "(" << picard::to_string(modulus_[i]) << ")";
    if (i > 0) os << "*x^" << i;
  }
  os << "), x = exp(2*pi*i*" << k_ << "/" << m_ << ")";
  return os.str();
}

std::array<KNum, NumberField::kMaxDegree> NumberField::reduce(std::vector<KNum> poly) const {
  const int d = degree();
  for (int i = static_cast<int>(poly.size()) - 1; i >= d; --i) {
    KNum c = poly[i];
    if (c.is_zero()) continue;
    for (int j = 0; j <= d; ++j) poly[i - d + j] -= c * modulus_[j];
  }
  std::array<KNum, kMaxDegree> out{};
  for (int i = 0; i < d && i < static_cast<int>(poly.size()); ++i) out[i] = poly[i];
  return out;
}

// ---- FNum

FNum FNum::constant(const NumberField* f, const KNum& x) {
  std::array<KNum, NumberField::kMaxDegree> c{};
  c[0] = x;
  return {f, c};
}

FNum FNum::generator(const NumberField* f) {
  if (f->is_base()) throw InvalidArgument("base field has no generator");
  std::array<KNum, NumberField::kMaxDegree> c{};
  c[1] = KNum(1);
  return {f, c};
}

bool FNum::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool FNum::in_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

KNum FNum::base_value() const {
  if (!in_base()) throw InvalidArgument("element does not lie in K");
  return c_[0];
}

const NumberField* FNum::common(const FNum& x, const FNum& y) {
  if (x.f_ == y.f_) return x.f_;
  if (x.f_->is_base()) return y.f_;
  if (y.f_->is_base()) return x.f_;
  throw InvalidArgument("arithmetic across different number fields");
}

FNum FNum::operator-() const {
  FNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FNum& FNum::operator+=(const FNum& o) {
  f_ = common(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FNum& FNum::operator-=(const FNum& o) {
  f_ = common(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FNum operator*(const FNum& x, const FNum& y) {
  const NumberField* f = FNum::common(x, y);
  if (f->is_base()) return FNum(x.c_[0] * y.c_[0]);
  std::vector<KNum> p(2 * NumberField::kMaxDegree - 1, KNum(0));
  for (int i = 0; i < NumberField::kMaxDegree; ++i) {
    if (x.c_[i].is_zero()) continue;
    for (int j = 0; j < NumberField::kMaxDegree; ++j) {
      if (!y.c_[j].is_zero()) p[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return {f, f->reduce(std::move(p))};
}

bool operator==(const FNum& x, const FNum& y) { return (x - y).is_zero(); }

FNum FNum::conj() const {
  if (f_->is_base()) return FNum(c_[0].conj());
  FNum li(f_, f_->lambda_inverse());
  FNum r = constant(f_, c_[0].conj());
  FNum p = li;
  for (int i = 1; i < f_->degree(); ++i) {
    r += constant(f_, c_[i].conj()) * p;
    p = p * li;
  }
  return r;
}

FNum FNum::inv() const {
  if (is_zero()) throw InvalidArgument("division by zero in number field");
  if (f_->is_base()) return FNum(c_[0].inv());
  // Solve (multiplication by *this) y = 1 over K.
  const int d = f_->degree();
  std::vector<std::vector<KNum>> m(d, std::vector<KNum>(d + 1));
  FNum col = *this;
  FNum gen = generator(f_);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
    col = col * gen;
  }
  m[0][d] = KNum(1);
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c].is_zero()) ++piv;
    if (piv == d) throw InvalidArgument("singular multiplication map; modulus not irreducible");
    std::swap(m[piv], m[c]);
    KNum pinv = m[c][c].inv();
    for (int k = c; k <= d; ++k) m[c][k] *= pinv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      KNum fac = m[r][c];
      for (int k = c; k <= d; ++k) m[r][k] -= fac * m[c][k];
    }
  }
  std::array<KNum, NumberField::kMaxDegree> out{};
  for (int i = 0; i < d; ++i) out[i] = m[i][d];
  return {f_, out};
}

CBall FNum::enclose(long prec) const {
  CBall acc = CBall::from_knum(c_[0], prec);
  if (f_->is_base()) return acc;
  CBall lam = CBall::root_of_unity(f_->root_k(), f_->root_m(), prec);
  CBall p = lam;
  for (int i = 1; i < f_->degree(); ++i) {
    acc = acc + CBall::from_knum(c_[i], prec) * p;
    p = p * lam;
  }
  return acc;
}

int FNum::real_sign() const {
  if (is_zero()) return 0;
  if (in_base()) {
    if (!c_[0].is_rational()) throw InvalidArgument("real_sign of non-real element");
    return sgn(c_[0].a);
  }
  PrecisionPolicy pol = precision_policy();
  for (long p = pol.start_bits; p <= pol.max_bits; p *= 2) {
    CBall b = enclose(p);
    int s = b.re.certain_sign();
    if (s != 0) return s;
  }
  throw PrecisionError("sign undecided at precision cap", enclose(pol.max_bits).to_string());
}

Int FNum::real_floor() const {
  if (in_base()) {
    if (!c_[0].is_rational()) throw InvalidArgument("floor of non-real element");
    return picard::floor(c_[0].a);
  }
  PrecisionPolicy pol = precision_policy();
  for (long p = pol.start_bits; p <= pol.max_bits; p *= 2) {
    CBall b = enclose(p);
    Int out;
    if (b.re.certain_floor(out)) return out;
    // The enclosure straddles an integer; it may be the exact value.
    Int n = picard::floor(Rat(b.re.to_double() + 0.5));
    if ((*this - FNum(KNum(Rat(n)))).is_zero()) return n;
  }
  throw PrecisionError("floor undecided at precision cap", enclose(pol.max_bits).to_string());
}

double FNum::real_approx() const { return enclose(64).re.to_double(); }
double FNum::imag_approx() const { return enclose(64).im.to_double(); }

std::string FNum::to_string() const {
  if (f_->is_base()) return picard::to_string(c_[0]);
  std::string out;
  for (int i = 0; i < f_->degree(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + picard::to_string(c_[i]) + ")";
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int compare_real(const FNum& x, const FNum& y) { return (x - y).real_sign(); }

}  // namespace picard
