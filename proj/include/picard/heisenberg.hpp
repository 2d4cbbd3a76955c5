#pragma once

// The cusp stabilizer: Heisenberg translations T(z, s) (t = s*sqrt7), the
// half-turn R = diag(1,-1,1), the prism P and reduction into it.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "picard/hermitian.hpp"

namespace picard {

struct HeisPt {
  KNum z;
  Rat s;
  friend bool operator==(const HeisPt&, const HeisPt&) = default;
};

// Same coordinates over a number field (real s).
struct HeisAlg {
  FNum z, s;
};

HeisPt heis_mul(const HeisPt& p, const HeisPt& q);
HeisPt heis_inv(const HeisPt& p);
HeisAlg heis_mul(const HeisAlg& p, const HeisAlg& q);
// Real element b with x = a + b*tau, a real.
FNum tau_coef(const FNum& x);

// Matrix of the Heisenberg translation T(z, s); integral iff z in O and s = N(z) mod 2.
MatK heis_matrix(const KNum& z, const Rat& s);

// T1^m Ttau^n R^eps Tv^l.
struct CuspElt {
  std::int64_t m = 0, n = 0;
  int eps = 0;
  std::int64_t l = 0;

  static CuspElt from_matrix(const Mat3& g);  // throws unless g fixes (1,0,0)
  static bool fixes_infinity(const Mat3& g);
  Mat3 to_matrix() const;
  GroupElt to_group() const { return GroupElt(to_matrix(), word()); }
  // The translation part T(z0, s0) with R^eps following it.
  HeisPt translation() const;
  CuspElt inverse() const;
  friend CuspElt operator*(const CuspElt& x, const CuspElt& y);

  HeisPt act(const HeisPt& p) const;
  HeisAlg act(const HeisAlg& p) const;

  std::string word() const;
  friend bool operator==(const CuspElt&, const CuspElt&) = default;
  friend auto operator<=>(const CuspElt&, const CuspElt&) = default;
};

Mat3 T1();
Mat3 Ttau();
Mat3 Ttaubar();
Mat3 Tv();
Mat3 Rmat();

enum class PrismFacet { A0, B0, AB1, S0, S2 };
std::string to_string(PrismFacet f);

struct PrismMembership {
  enum Location { Interior, Boundary, Outside } location;
  std::vector<PrismFacet> facets;
};

// z = a + b*tau; P: a >= 0, b >= 0, a + b <= 1, 0 <= s <= 2.
PrismMembership prism_membership(const HeisPt& p);
PrismMembership prism_membership(const HeisAlg& p);

struct PrismReduction {
  CuspElt elt;
  HeisPt point;
};
PrismReduction reduce_to_prism(const HeisPt& p);
// Cusp element moving the point into P, for points over a number field.
CuspElt prism_reducer(const HeisAlg& p);

struct CuspOverlap {
  CuspElt elt;
  // A point x of P with elt(x) in P, as (a, b, s).
  std::array<Rat, 3> witness;
};
// All cusp elements with elt(P) meeting P, with a vertex certificate each.
std::vector<CuspOverlap> enumerate_cusp_overlaps();

struct CuspTorsionFamily {
  std::string family;    // e.g. "T1 R Tv^k"
  KNum w;                // T(w, s0) R with s0 = s_w + 2k
  Rat base_s;
  bool has_torsion;      // some k gives order 2
  std::int64_t k;        // that k when has_torsion
  GroupElt element;      // the order-2 element when has_torsion
};
std::vector<CuspTorsionFamily> cusp_torsion_classes();

}  // namespace picard
