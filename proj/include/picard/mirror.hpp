#pragma once

// Stabilizers of two mirrors: the mirror of R (polar e2) and the mirror L of
// Tt R (polar (1,-tau,0)).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picard/checks.hpp"
#include "picard/hermitian.hpp"

namespace picard {

struct MirrorContext {
  std::string name;
  Vec3O polar;
  Vec3K e, f;  // basis of the orthogonal complement of the polar

  static MirrorContext of_R();
  static MirrorContext of_L();
};

bool preserves_mirror(const GroupElt& g, const MirrorContext& ctx);
// g acts on the complement as a scalar, i.e. trivially on the mirror.
bool scalar_on_mirror(const Mat3& g, const MirrorContext& ctx);
// Smallest n with g^n scalar on the complement.
std::optional<int> order_on_mirror(const Mat3& g, const MirrorContext& ctx, int bound = 40);

// Primitive integral v with <v,v> = norm, <v, polar> = 0 and all tau-basis
// coefficients bounded by height in absolute value; canonical signs, sorted.
std::vector<Vec3O> search_orthogonal_mirrors(const MirrorContext& ctx, std::int64_t norm, std::int64_t height);

struct SpecialPoint {
  std::string element;  // word whose fixed point this is
  ProjPoint point;
  int one_lines = 0, two_lines = 0;
  std::size_t stab_order = 0;
};

struct MirrorRReport {
  CheckList checks;
  std::vector<SpecialPoint> points;
};
MirrorRReport verify_mirror_R();

struct MirrorLReport {
  CheckList checks;
  std::map<std::string, std::optional<int>> orders_on_mirror;
  // Assignments of the polar vectors to r1..r4 under which every relator holds.
  std::vector<std::string> passing_permutations;
  // Words built from the generators that act trivially on the mirror.
  std::vector<std::string> trivial_words;
  std::vector<Vec3O> found_polars;  // norm 2 first, then norm 1
};
MirrorLReport verify_mirror_L(std::int64_t height = 5, int cusp_search_len = 4);

// Generators of the mirror-L computation: r1..r4, s1, s2, tv.
const std::map<std::string, Mat3>& mirror_L_alphabet();

}  // namespace picard
