#pragma once

// Isometric spheres of the fourteen generators A1..A14, Cygan metric, cone
// translate sets and reduction of points into the coarse domain.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picard/heisenberg.hpp"
#include "picard/hermitian.hpp"

namespace picard {

struct Generator {
  std::string name;  // "A1".."A14"
  GroupElt elt;
  int inverse = 0;   // index (0-based) of the inverse generator
};

// A1..A14 (0-based indices 0..13).
const std::vector<Generator>& generator_table();

struct IsomSphere {
  GroupElt elt;
  HeisPt center;
  std::int64_t a31norm = 0;
  Rat r4;  // r^4 = 4 / N(a31)

  static IsomSphere of(const GroupElt& g);  // throws if g fixes infinity
  // Radius metadata for both printed formulas: sqrt(2/|a31|) and sqrt(2/depth).
  double radius() const;
  double radius_alt() const;
};

// Smallest k/1024 whose power-th power is >= x.
Rat root_upper_bound(const Rat& x, int power);

// Fourth power of the extended Cygan distance.
Rat cygan_dist4(const HoroCoords& p, const HoroCoords& q);

// inside: strict Ford inequality (x is outside the closed Cygan ball);
// boundary: equality; outside: x lies in the open ball.
enum class Side { inside, boundary, outside };
std::string to_string(Side s);

Side ford_side(const Vec3F& x, const GroupElt& g);
Side sphere_membership(const HoroCoords& h, const IsomSphere& s);

// Finite superset of {alpha : alpha(I(A_j)) meets the cone over P}.
std::vector<CuspElt> enumerate_cone_translates(int j);

struct CatalogSphere {
  IsomSphere sphere;
  Vec3O column;  // canonical primitive first column
  // Every (alpha, j) with alpha A_j having this isometric sphere.
  std::vector<std::pair<CuspElt, int>> aliases;
  CuspElt alpha() const { return aliases.front().first; }
  int j() const { return aliases.front().second; }
  std::string label() const;  // e.g. "T1 I(A1)"
};

// All spheres alpha(I(A_j)) with alpha in the cone translate set of j,
// deduplicated by sphere.
const std::vector<CatalogSphere>& sphere_catalog();

struct SphereHit {
  const CatalogSphere* sphere;
  Side side;  // boundary or outside
};
std::vector<SphereHit> spheres_containing(const Vec3F& x);

// Cone over P intersected with the Ford conditions of the catalog.
bool in_omega(const Vec3F& x);

struct DomainReduction {
  GroupElt elt;  // elt * input = output
  Vec3F point;
  int steps = 0;
};
DomainReduction reduce_to_domain(const Vec3F& x, int max_iters = 1000);

// A primitive null vector whose last coordinate has norm d, if one exists.
// Searches v2 over residues modulo d and solves the null equation for v1.
std::optional<Vec3O> null_vector_of_depth(std::int64_t d);

// Height coordinate u = -<x,x>/N(x3) as an exact real.
FNum height(const Vec3F& x);

}  // namespace picard
