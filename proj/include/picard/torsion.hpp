#pragma once

// Torsion in the Picard group: finite-order tests, fixed loci, candidate
// sweeps over the T_jk sets, cycle graphs on fixed points in the domain,
// stabilizers and the resulting conjugacy classes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picard/checks.hpp"
#include "picard/heisenberg.hpp"
#include "picard/hermitian.hpp"

namespace picard {

// Smallest n <= bound with g^n = +-Id. Every finite order is at most 18 here.
std::optional<int> projective_order(const GroupElt& g, int bound = 18);

struct EllipticType {
  bool reflection = false;
  // Polar vector for a complex reflection, negative fixed point otherwise.
  ProjPoint locus;
};
// Throws InvalidArgument unless g has projective order n.
EllipticType classify_elliptic(const GroupElt& g, int n);
// Polar vector when g is a complex reflection.
std::optional<ProjPoint> reflection_polar(const GroupElt& g);

// k with A_j A_k = +-Id (1-based).
int inverse_index(int j);
// Superset of the cusp elements alpha with alpha(I(A_j)) meeting I(A_k).
std::vector<CuspElt> enumerate_tjk(int j, int k);

struct TorsionCandidate {
  GroupElt elt;  // word "alpha A_j" or a cusp word
  int order = 0;
  EllipticType type;
};
// alpha A_j for alpha in T_jk with finite order > 1, then the cusp torsion.
std::vector<TorsionCandidate> torsion_candidates();

// Conjugator c with c g1 c^-1 = g2, searched over words in T1, Tt, R, I
// up to max_len letters; nullopt if none is found or invariants differ.
std::optional<GroupElt> reflection_conjugacy(const GroupElt& g1, const GroupElt& g2, int max_len = 8);

struct GraphSeed {
  ProjPoint point;
  // An element whose only fixed point in the ball is this point.
  std::optional<GroupElt> fixer;
};

struct CycleEdge {
  int from = 0, to = 0;
  GroupElt label;  // label(vertex[from]) = vertex[to]
};

struct CycleGraph {
  std::vector<GraphSeed> vertices;
  std::vector<CycleEdge> edges;

  int find(const ProjPoint& p, const std::optional<GroupElt>& fixer = std::nullopt) const;
  std::vector<std::vector<int>> components() const;
  int loops(int v) const;
};

// Moves a point of the closed domain to its representative with 0 <= s < 2.
struct Normalized {
  GroupElt elt;
  Vec3F point;
};
Normalized normalize_vertical(const Vec3F& x);

// Seeds must lie in the closed domain; the graph is closed under side pairings.
CycleGraph build_cycle_graph(const std::vector<GraphSeed>& seeds);

struct ReflectionInfo {
  GroupElt elt;
  ProjPoint polar;
  std::int64_t polar_norm = 0;
};

struct FiniteGroup {
  std::vector<GroupElt> elements;  // projective, identity first
  std::size_t linear_order = 0;  // order of the preimage in U(J, O)
  std::vector<ReflectionInfo> reflections;
  int one_lines = 0, two_lines = 0;
  // Orbit sizes of the mirrors under conjugation by the group.
  std::vector<int> one_line_orbits, two_line_orbits;

  std::size_t projective_order() const { return elements.size(); }
};

// Closure of the generators; throws CapExceeded past cap elements.
FiniteGroup finite_group(const std::vector<GroupElt>& gens, std::size_t cap = 10000);
// Stabilizer of vertex v of the graph.
FiniteGroup stabilizer(const CycleGraph& graph, int v, std::size_t cap = 10000);
// Stabilizer of an arbitrary negative point, conjugated back to it.
FiniteGroup stabilizer(const ProjPoint& p, std::size_t cap = 10000);

struct TorsionClass {
  GroupElt rep;
  int proj_order = 0;
  bool reflection = false;
  ProjPoint locus;  // polar vector or fixed point of rep
  std::optional<std::int64_t> norm;
  // isolated classes only
  std::optional<ProjPoint> domain_point;  // conjugate fixed point in the domain
  std::optional<std::size_t> stab_order;
  std::size_t linear_stab_order = 0;
  int one_lines = 0, two_lines = 0;
  std::vector<int> one_line_orbits, two_line_orbits;
  int component = -1;
  bool from_candidate = true;  // rep is one of the swept candidates
};

struct TorsionSummary {
  std::vector<TorsionClass> classes;
  std::size_t candidates = 0;
  CycleGraph graph;
  std::vector<std::size_t> component_roots;
};

struct EnumerationOptions {
  std::size_t closure_cap = 10000;
  int word_search_len = 8;  // conjugator search between reflections
};

// Reflection classes first, then isolated classes by order, fixed-point norm
// and stabilizer order.
TorsionSummary enumerate_torsion(const EnumerationOptions& opts = {});

// Merges isolated classes related by an explicit conjugator found through the
// cycle graph; classes with different invariants are never compared.
std::vector<TorsionClass> dedup_isolated(const std::vector<TorsionClass>& classes);

struct PowerConjugacy {
  GroupElt conjugator;
  int power = 1;
};
// c with c g c^-1 = h^k for some k, found through the cycle graph (isolated
// elements) or the word search (reflections).
std::optional<PowerConjugacy> conjugate_to_power(const GroupElt& g, const GroupElt& h);

// The two stabilizer computations worked out by hand: the fixed point of
// (R T1 I T1^-1)^2 and that of an order-6 element. The order-6 point is
// first reduced into the domain; whether the given conjugate already lies
// there is reported separately.
struct StabilizerExamples {
  CheckList checks;
  CheckList printed_claims;
};
StabilizerExamples verify_stabilizer_examples(std::size_t cap = 10000);

std::string join_words(const std::string& a, const std::string& b);

}  // namespace picard
