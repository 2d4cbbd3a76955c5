#include "picard/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "picard/errors.hpp"
#include "picard/heisenberg.hpp"
#include "picard/presentation.hpp"

namespace picard {

namespace {

int mod(std::int64_t x, int p) {
  int r = static_cast<int>(x % p);
  return r < 0 ? r + p : r;
}

bool commutes(const FpMat& x, const FpMat& y, int p) { return fp_mul(x, y, p) == fp_mul(y, x, p); }

}  // namespace

ResidueMap ResidueMap::isqrt7() { return {"isqrt7", 7, 4}; }
ResidueMap ResidueMap::tau() { return {"tau", 2, 0}; }

ResidueMap ResidueMap::by_name(const std::string& name) {
  if (name == "isqrt7") return isqrt7();
  if (name == "tau") return tau();
  throw InvalidArgument("unknown ideal: " + name);
}

int reduce_mod(const OInt& x, const ResidueMap& r) {
  return mod(mod(x.a, r.p) + mod(x.b, r.p) * r.tau_image, r.p);
}

FpMat reduce_mod(const Mat3& m, const ResidueMap& r) {
  FpMat out{};
  for (int i = 0; i < 9; ++i) out[i] = static_cast<std::uint8_t>(reduce_mod(m.e[i], r));
  return out;
}

FpMat fp_mul(const FpMat& x, const FpMat& y, int p) {
  FpMat out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += x[3 * i + k] * y[3 * k + j];
      out[3 * i + j] = static_cast<std::uint8_t>(s % p);
    }
  }
  return out;
}

FpMat fp_identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

bool fp_is_scalar(const FpMat& m) {
  return m[1] == 0 && m[2] == 0 && m[3] == 0 && m[5] == 0 && m[6] == 0 && m[7] == 0 && m[0] == m[4] &&
         m[4] == m[8];
}

std::string fp_to_string(const FpMat& m, int p) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < 3; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) {
      int v = m[3 * i + j];
      if (2 * v > p) v -= p;
      out << (j ? ", " : "") << v;
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

int fp_order(const FpMat& m, int p) {
  FpMat x = m;
  for (int n = 1;; ++n) {
    if (x == fp_identity()) return n;
    x = fp_mul(x, m, p);
  }
}

int fp_projective_order(const FpMat& m, int p) {
  FpMat x = m;
  for (int n = 1;; ++n) {
    if (fp_is_scalar(x)) return n;
    x = fp_mul(x, m, p);
  }
}

FpMatGroup image_group(const std::vector<Mat3>& gens, const ResidueMap& r, std::size_t cap) {
  std::vector<FpMat> g;
  for (const auto& m : gens) g.push_back(reduce_mod(m, r));
  std::set<FpMat> seen = {fp_identity()};
  std::deque<FpMat> queue = {fp_identity()};
  while (!queue.empty()) {
    FpMat x = queue.front();
    queue.pop_front();
    for (const auto& y : g) {
      FpMat z = fp_mul(x, y, r.p);
      if (seen.insert(z).second) {
        if (seen.size() > cap) throw CapExceeded("image group too large", static_cast<long>(cap));
        queue.push_back(z);
      }
    }
  }
  FpMatGroup out;
  out.p = r.p;
  out.elements.assign(seen.begin(), seen.end());
  for (const auto& x : out.elements) {
    if (fp_is_scalar(x)) ++out.scalars;
    if (std::all_of(g.begin(), g.end(), [&](const FpMat& y) { return commutes(x, y, r.p); })) {
      out.center.push_back(x);
    }
  }
  return out;
}

Certificate torsion_free_certificate(const ResidueMap& r, const std::vector<TorsionClass>& classes) {
  Certificate cert;
  cert.map = r;
  auto [a, b] = ab_linear();
  cert.image = image_group({a, b}, r);

  cert.torsion_free = true;
  for (const auto& cl : classes) {
    ClassImage ci;
    ci.word = cl.rep.word();
    ci.proj_order = cl.proj_order;
    FpMat m = reduce_mod(cl.rep.matrix(), r);
    ci.image_proj_order = fp_projective_order(m, r.p);
    ci.image_order = fp_order(m, r.p);
    ci.image_order_neg = fp_order(reduce_mod(-cl.rep.matrix(), r), r.p);
    ci.passed = ci.image_proj_order == ci.proj_order;
    cert.torsion_free = cert.torsion_free && ci.passed;
    cert.classes.push_back(ci);
  }

  FpMat tv = reduce_mod(Tv(), r);
  cert.tv_order = fp_order(tv, r.p);
  FpMat x = reduce_mod(T1() * Rmat(), r);
  for (int k = 0; k < std::max(cert.tv_order, 4); ++k) {
    cert.cusp.add("T1 R Tv^" + std::to_string(k) + " maps to a non-scalar", !fp_is_scalar(x), fp_to_string(x, r.p));
    x = fp_mul(x, tv, r.p);
  }
  for (const auto& fam : cusp_torsion_classes()) {
    if (!fam.has_torsion) continue;
    FpMat y = reduce_mod(fam.element.matrix(), r);
    cert.cusp.add(fam.family + " with k = " + std::to_string(fam.k) + " keeps order 2",
                  fp_projective_order(y, r.p) == 2, fp_to_string(y, r.p));
  }
  cert.torsion_free_at_infinity = cert.cusp.all_passed();
  return cert;
}

}  // namespace picard
