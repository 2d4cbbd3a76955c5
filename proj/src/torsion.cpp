#include "picard/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>

#include "picard/errors.hpp"
#include "picard/ford.hpp"

namespace picard {

namespace {

MatK mul(const MatK& x, const MatK& y) {
  MatK r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      KNum acc;
      for (int k = 0; k < 3; ++k) acc += x[3 * i + k] * y[3 * k + j];
      r[3 * i + j] = acc;
    }
  }
  return r;
}

bool is_pm_id(const MatK& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && !m[3 * i + j].is_zero()) return false;
    }
  }
  return m[0] == m[4] && m[4] == m[8] && (m[0] == KNum(1) || m[0] == KNum(-1));
}

template <class T>
std::array<T, 9> adj3(const std::array<T, 9>& a) {
  auto A = [&a](int i, int j) -> const T& { return a[3 * i + j]; };
  return {A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1), A(0, 2) * A(2, 1) - A(0, 1) * A(2, 2),
          A(0, 1) * A(1, 2) - A(0, 2) * A(1, 1), A(1, 2) * A(2, 0) - A(1, 0) * A(2, 2),
          A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0), A(0, 2) * A(1, 0) - A(0, 0) * A(1, 2),
          A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0), A(0, 1) * A(2, 0) - A(0, 0) * A(2, 1),
          A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0)};
}

template <class T>
std::optional<std::array<T, 3>> nonzero_column(const std::array<T, 9>& a) {
  for (int j = 0; j < 3; ++j) {
    std::array<T, 3> c{a[j], a[3 + j], a[6 + j]};
    if (!c[0].is_zero() || !c[1].is_zero() || !c[2].is_zero()) return c;
  }
  return std::nullopt;
}

int rank3(const MatK& a) {
  if (std::all_of(a.begin(), a.end(), [](const KNum& x) { return x.is_zero(); })) return 0;
  MatK ad = adj3(a);
  if (std::all_of(ad.begin(), ad.end(), [](const KNum& x) { return x.is_zero(); })) return 1;
  KNum det = a[0] * ad[0] + a[1] * ad[3] + a[2] * ad[6];
  return det.is_zero() ? 2 : 3;
}

MatK shift(MatK a, const KNum& eps) {
  a[0] -= eps;
  a[4] -= eps;
  a[8] -= eps;
  return a;
}

// Characteristic polynomial, low-to-high, monic.
std::vector<KNum> charpoly(const MatK& m) {
  MatK ad = adj3(m);
  KNum det = m[0] * ad[0] + m[1] * ad[3] + m[2] * ad[6];
  return {-det, ad[0] + ad[4] + ad[8], -(m[0] + m[4] + m[8]), KNum(1)};
}

KNum eval(const std::vector<KNum>& p, const KNum& x) {
  KNum acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<KNum> divide_linear(const std::vector<KNum>& p, const KNum& root) {
  std::vector<KNum> q(p.size() - 1);
  KNum carry;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    carry = p[i + 1] + carry * root;
    q[i] = carry;
  }
  return q;
}

std::complex<double> to_complex(const KNum& x) {
  return {x.re().get_d(), x.im_sqrt7().get_d() * std::sqrt(7.0)};
}

GroupElt named(const Mat3& m, const std::string& w) { return GroupElt(m, w); }

GroupElt compose(const GroupElt& x, const GroupElt& y) {
  return (x * y).with_word(join_words(x.word(), y.word()));
}

std::string invert_word(const std::string& w) {
  if (w.empty() || w == "Id") return "Id";
  return "(" + w + ")^-1";
}

GroupElt inverse_named(const GroupElt& g) { return g.inverse().with_word(invert_word(g.word())); }

bool same_point(const GraphSeed& a, const ProjPoint& p, const std::optional<GroupElt>& fixer) {
  if (a.point.is_rational() || p.is_rational()) return a.point.is_rational() && p.is_rational() && a.point == p;
  if (a.point.field() == p.field()) return a.point == p;
  if (fixer) return proportional(fixer->matrix().apply(a.point.coords()), a.point.coords());
  if (a.fixer) return proportional(a.fixer->matrix().apply(p.coords()), p.coords());
  return a.point == p;
}

const std::vector<CuspOverlap>& overlaps() {
  static const std::vector<CuspOverlap> v = enumerate_cusp_overlaps();
  return v;
}

// path[w] maps the root to vertex w, for every w in the root's component.
std::map<int, GroupElt> spanning_paths(const CycleGraph& g, int root) {
  std::map<int, GroupElt> path;
  path[root] = GroupElt().with_word("Id");
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : g.edges) {
      bool has_from = path.count(e.from) > 0, has_to = path.count(e.to) > 0;
      if (has_from && !has_to) {
        path[e.to] = compose(e.label, path[e.from]);
        grew = true;
      } else if (has_to && !has_from) {
        path[e.from] = compose(inverse_named(e.label), path[e.to]);
        grew = true;
      }
    }
  }
  return path;
}

std::vector<Mat3> cyclic_key(const GroupElt& g) {
  std::vector<Mat3> key;
  GroupElt p = g;
  while (!p.is_identity()) {
    key.push_back(p.matrix());
    p = p * g;
  }
  key.push_back(Mat3::identity());
  std::sort(key.begin(), key.end());
  return key;
}

std::size_t word_length(const std::string& w) {
  if (w.empty() || w == "Id") return 0;
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), ' ')) + 1;
}

}  // namespace

std::string join_words(const std::string& a, const std::string& b) {
  bool ea = a.empty() || a == "Id", eb = b.empty() || b == "Id";
  if (ea && eb) return "Id";
  if (ea) return b;
  if (eb) return a;
  return a + " " + b;
}

std::optional<int> projective_order(const GroupElt& g, int bound) {
  MatK m = to_k(g.matrix());
  MatK p = m;
  for (int n = 1; n <= bound; ++n) {
    if (is_pm_id(p)) return n;
    p = mul(p, m);
  }
  return std::nullopt;
}

EllipticType classify_elliptic(const GroupElt& g, int n) {
  auto ord = projective_order(g, std::max(n, 1));
  if (!ord || *ord != n) throw InvalidArgument("element does not have projective order " + std::to_string(n));
  if (n == 1) throw InvalidArgument("the identity has no isolated fixed locus");
  MatK m = to_k(g.matrix());
  for (int eps : {1, -1}) {
    MatK a = shift(m, KNum(eps));
    int r = rank3(a);
    if (r == 1) {
      Vec3K v = *nonzero_column(a);
      int s = sgn(herm_inner(v, v).a);
      if (s == 0) throw std::logic_error("null image for a finite-order element");
      return {s > 0, ProjPoint(v)};
    }
    if (r == 2) {
      Vec3K v = *nonzero_column(adj3(a));
      if (sgn(herm_inner(v, v).a) < 0) return {false, ProjPoint(v)};
    }
  }
  std::vector<KNum> q = charpoly(m);
  for (int eps : {1, -1}) {
    while (q.size() > 1 && eval(q, KNum(eps)).is_zero()) q = divide_linear(q, KNum(eps));
  }
  if (q.size() < 3) throw std::logic_error("eigenvalues in K but no negative eigenvector");
  const long order = 2L * n;
  for (long k = 0; k < order; ++k) {
    std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order));
    std::complex<double> acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * w + to_complex(*it);
    if (std::abs(acc) > 1e-9) continue;
    const NumberField* f = NumberField::root_of_unity(q, k, order);
    FNum lam = FNum::generator(f);
    std::array<FNum, 9> a;
    for (int i = 0; i < 9; ++i) a[i] = FNum(m[i]);
    for (int i = 0; i < 3; ++i) a[4 * i] -= lam;
    auto col = nonzero_column(adj3(a));
    if (!col) continue;
    if (herm_inner(*col, *col).real_sign() < 0) return {false, ProjPoint(*col)};
  }
  throw std::logic_error("no negative eigenvector found");
}

std::optional<ProjPoint> reflection_polar(const GroupElt& g) {
  if (g.is_identity() || !(g * g).is_identity()) return std::nullopt;
  EllipticType t = classify_elliptic(g, 2);
  if (!t.reflection) return std::nullopt;
  return t.locus;
}

int inverse_index(int j) {
  const auto& gens = generator_table();
  if (j < 1 || j > static_cast<int>(gens.size())) throw InvalidArgument("generator index out of range");
  return gens[j - 1].inverse + 1;
}

std::vector<CuspElt> enumerate_tjk(int j, int k) {
  if (inverse_index(j) != k) throw InvalidArgument("T_jk is only defined when A_j A_k = +-Id");
  const auto& gens = generator_table();
  IsomSphere sj = IsomSphere::of(gens[j - 1].elt), sk = IsomSphere::of(gens[k - 1].elt);
  Rat rsum = root_upper_bound(sj.r4, 4) + root_upper_bound(sk.r4, 4);
  Rat bound = rsum * rsum * rsum * rsum;
  const double bd = bound.get_d();
  HoroCoords ck{sk.center.z, sk.center.s, Rat(0)};
  constexpr std::int64_t kBox = 10;
  std::vector<CuspElt> out;
  for (std::int64_t m = -kBox; m <= kBox; ++m) {
    for (std::int64_t n = -kBox; n <= kBox; ++n) {
      for (int eps = 0; eps <= 1; ++eps) {
        HeisPt c = CuspElt{m, n, eps, 0}.act(sj.center);
        Rat h = (c.z - ck.z).norm();
        if (h * h > bound) continue;
        // the vertical offset is base + 2l
        double base = Rat(c.s - ck.s + tau_coef(c.z * ck.z.conj())).get_d();
        double reach = std::sqrt(std::max(0.0, (bd - h.get_d() * h.get_d()) / 7.0)) + 1.0;
        auto lo = static_cast<std::int64_t>(std::floor((-reach - base) / 2));
        auto hi = static_cast<std::int64_t>(std::ceil((reach - base) / 2));
        for (std::int64_t l = lo; l <= hi; ++l) {
          CuspElt a{m, n, eps, l};
          HeisPt cc = a.act(sj.center);
          if (cygan_dist4(HoroCoords{cc.z, cc.s, Rat(0)}, ck) > bound) continue;
          if (std::abs(m) == kBox || std::abs(n) == kBox) throw std::logic_error("T_jk search box too small");
          out.push_back(a);
        }
      }
    }
  }
  return out;
}

std::vector<TorsionCandidate> torsion_candidates() {
  const auto& gens = generator_table();
  std::vector<TorsionCandidate> out;
  for (int j = 1; j <= static_cast<int>(gens.size()); ++j) {
    for (const CuspElt& a : enumerate_tjk(j, inverse_index(j))) {
      GroupElt g = (a.to_group() * gens[j - 1].elt).with_word(join_words(a.word(), gens[j - 1].name));
      auto n = projective_order(g);
      if (!n || *n == 1) continue;
      out.push_back({g, *n, classify_elliptic(g, *n)});
    }
  }
  for (const auto& f : cusp_torsion_classes()) {
    if (!f.has_torsion) continue;
    GroupElt g = f.element.with_word(CuspElt::from_matrix(f.element.matrix()).word());
    out.push_back({g, 2, classify_elliptic(g, 2)});
  }
  return out;
}

std::optional<GroupElt> reflection_conjugacy(const GroupElt& g1, const GroupElt& g2, int max_len) {
  auto p1 = reflection_polar(g1), p2 = reflection_polar(g2);
  if (!p1 || !p2 || p1->rational_norm() != p2->rational_norm()) return std::nullopt;
  const std::vector<GroupElt> letters = {
      named(T1(), "T1"), named(T1().unitary_inverse(), "T1^-1"), named(Ttau(), "Tt"),
      named(Ttau().unitary_inverse(), "Tt^-1"), named(Rmat(), "R"), named(generator_table()[0].elt.matrix(), "I")};
  auto explore = [&letters](const ProjPoint& start, int depth) {
    std::map<Vec3O, GroupElt> seen;
    seen.emplace(start.rational(), GroupElt().with_word("Id"));
    std::vector<std::pair<Vec3O, GroupElt>> frontier = {{start.rational(), GroupElt().with_word("Id")}};
    for (int d = 0; d < depth; ++d) {
      std::vector<std::pair<Vec3O, GroupElt>> next;
      for (const auto& [v, w] : frontier) {
        for (const auto& l : letters) {
          Vec3O u = primitive_rep(to_k(l.matrix().apply(v)));
          if (seen.count(u)) continue;
          GroupElt c = compose(l, w);
          seen.emplace(u, c);
          next.emplace_back(u, c);
        }
      }
      frontier = std::move(next);
    }
    return seen;
  };
  auto fwd = explore(*p1, (max_len + 1) / 2);
  auto bwd = explore(*p2, max_len / 2);
  std::optional<GroupElt> best;
  for (const auto& [v, c] : fwd) {
    auto it = bwd.find(v);
    if (it == bwd.end()) continue;
    // c p1 = h p2, so h^-1 c maps p1 to p2
    GroupElt h = it->second;
    GroupElt conj = compose(inverse_named(h), c);
    if (!(conj * g1 * conj.inverse() == g2)) continue;
    if (!best || word_length(conj.word()) < word_length(best->word())) best = conj;
  }
  return best;
}

int CycleGraph::find(const ProjPoint& p, const std::optional<GroupElt>& fixer) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (same_point(vertices[i], p, fixer)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::vector<int>> CycleGraph::components() const {
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[root(e.from)] = root(e.to);
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < vertices.size(); ++i) groups[root(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

int CycleGraph::loops(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const CycleEdge& e) { return e.from == v && e.to == v; }));
}

Normalized normalize_vertical(const Vec3F& x) {
  HoroAlg h = horo_coords(x);
  Int k = FNum(h.s * FNum(KNum(rat(1, 2)))).real_floor();
  if (k == 0) return {GroupElt().with_word("Id"), x};
  long e = -k.get_si();
  GroupElt t = GroupElt(Tv().pow(e), e == 1 ? "Tv" : "Tv^" + std::to_string(e));
  return {t, t.matrix().apply(x)};
}

CycleGraph build_cycle_graph(const std::vector<GraphSeed>& seeds) {
  CycleGraph g;
  std::vector<int> queue;
  for (const auto& s : seeds) {
    if (g.find(s.point, s.fixer) >= 0) continue;
    if (!in_omega(s.point.coords())) throw InvalidArgument("cycle graph seed outside the domain: " + s.point.to_string());
    g.vertices.push_back(s);
    queue.push_back(static_cast<int>(g.vertices.size()) - 1);
  }
  const auto& gens = generator_table();
  std::set<std::tuple<int, int, Mat3>> seen;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    const Vec3F x = g.vertices[v].point.coords();
    std::vector<GroupElt> moves = {GroupElt().with_word("Id")};
    for (const auto& hit : spheres_containing(x)) {
      if (hit.side == Side::outside) throw std::logic_error("cycle graph vertex outside the domain");
      const CatalogSphere& cs = *hit.sphere;
      std::string w = join_words(gens[gens[cs.j()].inverse].name, cs.alpha().inverse().word());
      moves.push_back(cs.sphere.elt.inverse().with_word(w));
    }
    for (const GroupElt& h : moves) {
      Vec3F y = h.matrix().apply(x);
      HoroAlg hy = horo_coords(y);
      HeisAlg py{hy.z, hy.s};
      CuspElt beta = prism_reducer(py);
      py = beta.act(py);
      for (const auto& ov : overlaps()) {
        if (prism_membership(ov.elt.act(py)).location == PrismMembership::Outside) continue;
        CuspElt c = ov.elt * beta;
        GroupElt label = compose(c.to_group(), h);
        Normalized nz = normalize_vertical(label.matrix().apply(x));
        label = compose(nz.elt, label);
        if (label.is_identity()) continue;
        ProjPoint pz(nz.point);
        std::optional<GroupElt> fz;
        if (g.vertices[v].fixer) fz = label * *g.vertices[v].fixer * label.inverse();
        int w = g.find(pz, fz);
        if (w < 0) {
          if (!in_omega(nz.point)) throw std::logic_error("side pairing left the domain");
          g.vertices.push_back({pz, fz});
          w = static_cast<int>(g.vertices.size()) - 1;
          queue.push_back(w);
        }
        if (seen.emplace(v, w, label.matrix()).second) g.edges.push_back({v, w, label});
      }
    }
  }
  return g;
}

FiniteGroup finite_group(const std::vector<GroupElt>& gens, std::size_t cap) {
  FiniteGroup fg;
  std::set<GroupElt> seen;
  fg.elements.push_back(GroupElt().with_word("Id"));
  seen.insert(fg.elements.front());
  for (std::size_t i = 0; i < fg.elements.size(); ++i) {
    for (const auto& s : gens) {
      GroupElt e = compose(s, fg.elements[i]);
      if (!seen.insert(e).second) continue;
      fg.elements.push_back(e);
      if (fg.elements.size() > cap) throw CapExceeded("finite group closure exceeded the cap", static_cast<long>(cap));
    }
  }
  // -Id lies in every preimage
  fg.linear_order = 2 * fg.elements.size();
  for (const auto& e : fg.elements) {
    if (auto p = reflection_polar(e)) fg.reflections.push_back({e, *p, *p->rational_norm()});
  }
  for (std::int64_t norm : {1, 2}) {
    std::set<GroupElt> done;
    std::vector<int>& orbits = norm == 1 ? fg.one_line_orbits : fg.two_line_orbits;
    for (const auto& r : fg.reflections) {
      if (r.polar_norm != norm) continue;
      (norm == 1 ? fg.one_lines : fg.two_lines)++;
      if (done.count(r.elt)) continue;
      std::set<GroupElt> orbit;
      for (const auto& s : fg.elements) orbit.insert(s * r.elt * s.inverse());
      done.insert(orbit.begin(), orbit.end());
      orbits.push_back(static_cast<int>(orbit.size()));
    }
  }
  return fg;
}

FiniteGroup stabilizer(const CycleGraph& graph, int v, std::size_t cap) {
  auto path = spanning_paths(graph, v);
  std::vector<GroupElt> gens;
  std::set<GroupElt> seen;
  for (const auto& e : graph.edges) {
    if (!path.count(e.from)) continue;
    GroupElt s = compose(inverse_named(path.at(e.to)), compose(e.label, path.at(e.from)));
    if (s.is_identity() || !seen.insert(s).second) continue;
    gens.push_back(s);
  }
  return finite_group(gens, cap);
}

FiniteGroup stabilizer(const ProjPoint& p, std::size_t cap) {
  if (p.norm_sign() >= 0) throw InvalidArgument("stabilizer needs a negative point");
  DomainReduction d = reduce_to_domain(p.coords());
  Normalized nz = normalize_vertical(d.point);
  GroupElt g = nz.elt * d.elt;
  CycleGraph graph = build_cycle_graph({GraphSeed{ProjPoint(nz.point), std::nullopt}});
  FiniteGroup local = stabilizer(graph, 0, cap);
  std::vector<GroupElt> gens;
  for (const auto& e : local.elements) gens.push_back(g.inverse() * e * g);
  return finite_group(gens, cap);
}

TorsionSummary enumerate_torsion(const EnumerationOptions& opts) {
  TorsionSummary out;
  std::vector<TorsionCandidate> cands = torsion_candidates();
  out.candidates = cands.size();

  std::vector<TorsionClass> reflections;
  for (const auto& c : cands) {
    if (!c.type.reflection) continue;
    bool merged = false;
    for (auto& cl : reflections) {
      if (cl.locus == c.type.locus || reflection_conjugacy(c.elt, cl.rep, opts.word_search_len)) {
        if (word_length(c.elt.word()) < word_length(cl.rep.word())) {
          cl.rep = c.elt;
          cl.locus = c.type.locus;
        }
        merged = true;
        break;
      }
    }
    if (merged) continue;
    TorsionClass cl;
    cl.rep = c.elt;
    cl.proj_order = 2;
    cl.reflection = true;
    cl.locus = c.type.locus;
    cl.norm = c.type.locus.rational_norm();
    reflections.push_back(cl);
  }

  // Isolated fixed points: one seed per distinct point, conjugated into the domain.
  struct Seeded {
    std::size_t cand;
    GroupElt conj;  // conj * candidate point = seed point
    GraphSeed seed;
  };
  std::vector<Seeded> seeded;
  std::vector<GraphSeed> seeds;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& c = cands[i];
    if (c.type.reflection) continue;
    bool dup = false;
    for (const auto& s : seeded) {
      const auto& o = cands[s.cand];
      if (same_point(GraphSeed{o.type.locus, o.elt}, c.type.locus, c.elt)) {
        seeded.push_back({i, s.conj, s.seed});
        dup = true;
        break;
      }
    }
    if (dup) continue;
    DomainReduction d = reduce_to_domain(c.type.locus.coords());
    Normalized nz = normalize_vertical(d.point);
    GroupElt g = nz.elt * d.elt;
    GraphSeed seed{ProjPoint(nz.point), g * c.elt * g.inverse()};
    seeded.push_back({i, g, seed});
    seeds.push_back(seed);
  }
  out.graph = build_cycle_graph(seeds);

  std::vector<TorsionClass> isolated;
  const auto comps = out.graph.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const int root = comps[ci].front();
    out.component_roots.push_back(static_cast<std::size_t>(root));
    FiniteGroup st = stabilizer(out.graph, root, opts.closure_cap);
    auto path = spanning_paths(out.graph, root);

    // Conjugacy classes of cyclic subgroups generated by non-reflections.
    std::map<std::vector<Mat3>, std::size_t> class_of;
    std::vector<TorsionClass> local;
    for (const auto& e : st.elements) {
      if (e.is_identity() || reflection_polar(e)) continue;
      auto key = cyclic_key(e);
      if (class_of.count(key)) continue;
      for (const auto& s : st.elements) class_of.emplace(cyclic_key(s * e * s.inverse()), local.size());
      TorsionClass cl;
      cl.rep = e;
      cl.proj_order = static_cast<int>(key.size());
      cl.locus = out.graph.vertices[root].point;
      cl.from_candidate = false;
      local.push_back(cl);
    }
    for (const auto& s : seeded) {
      int w = out.graph.find(s.seed.point, s.seed.fixer);
      if (!path.count(w)) continue;
      const auto& c = cands[s.cand];
      GroupElt at_root = path.at(w).inverse() * s.conj * c.elt * s.conj.inverse() * path.at(w);
      auto it = class_of.find(cyclic_key(at_root));
      if (it == class_of.end()) throw std::logic_error("candidate missing from its stabilizer");
      TorsionClass& cl = local[it->second];
      if (!cl.from_candidate || word_length(c.elt.word()) < word_length(cl.rep.word())) {
        cl.rep = c.elt;
        cl.locus = c.type.locus;
        cl.from_candidate = true;
      }
    }
    for (auto& cl : local) {
      const ProjPoint& rp = out.graph.vertices[root].point;
      cl.norm = rp.rational_norm();
      cl.domain_point = rp;
      cl.stab_order = st.projective_order();
      cl.linear_stab_order = st.linear_order;
      cl.one_lines = st.one_lines;
      cl.two_lines = st.two_lines;
      cl.one_line_orbits = st.one_line_orbits;
      cl.two_line_orbits = st.two_line_orbits;
      cl.component = static_cast<int>(ci);
      isolated.push_back(cl);
    }
  }

  std::sort(reflections.begin(), reflections.end(), [](const TorsionClass& a, const TorsionClass& b) { return a.norm < b.norm; });
  std::stable_sort(isolated.begin(), isolated.end(), [](const TorsionClass& a, const TorsionClass& b) {
    if (a.proj_order != b.proj_order) return a.proj_order < b.proj_order;
    if (a.norm.has_value() != b.norm.has_value()) return a.norm.has_value();
    if (a.norm != b.norm) return *a.norm > *b.norm;
    return a.stab_order < b.stab_order;
  });
  out.classes = reflections;
  out.classes.insert(out.classes.end(), isolated.begin(), isolated.end());
  return out;
}

std::optional<PowerConjugacy> conjugate_to_power(const GroupElt& g, const GroupElt& h) {
  auto ng = projective_order(g), nh = projective_order(h);
  if (!ng || !nh || *ng == 1 || *nh == 1) return std::nullopt;
  EllipticType tg = classify_elliptic(g, *ng);
  if (tg.reflection) {
    GroupElt hk = h;
    for (int k = 1; k < *nh; ++k, hk = hk * h) {
      if (!reflection_polar(hk)) continue;
      if (auto c = reflection_conjugacy(g, hk)) return PowerConjugacy{*c, k};
    }
    return std::nullopt;
  }
  EllipticType th = classify_elliptic(h, *nh);
  if (th.reflection) return std::nullopt;
  auto place = [](const GroupElt& x, const ProjPoint& p) {
    DomainReduction d = reduce_to_domain(p.coords());
    Normalized nz = normalize_vertical(d.point);
    GroupElt c = nz.elt * d.elt;
    return std::pair{c, GraphSeed{ProjPoint(nz.point), c * x * c.inverse()}};
  };
  auto [cg, sg] = place(g, tg.locus);
  auto [ch, sh] = place(h, th.locus);
  CycleGraph graph = build_cycle_graph({sh, sg});
  int vh = graph.find(sh.point, sh.fixer), vg = graph.find(sg.point, sg.fixer);
  auto path = spanning_paths(graph, vh);
  if (!path.count(vg)) return std::nullopt;
  GroupElt moved = path.at(vg).inverse() * *sg.fixer * path.at(vg);
  FiniteGroup st = stabilizer(graph, vh);
  for (const auto& sigma : st.elements) {
    GroupElt x = sigma * moved * sigma.inverse();
    GroupElt hk = *sh.fixer;
    for (int k = 1; k < *nh; ++k, hk = hk * *sh.fixer) {
      if (!(x == hk)) continue;
      GroupElt c = ch.inverse() * sigma * path.at(vg).inverse() * cg;
      if (!(c * g * c.inverse() == h.pow(k))) throw std::logic_error("conjugator check failed");
      return PowerConjugacy{c, k};
    }
  }
  return std::nullopt;
}

std::vector<TorsionClass> dedup_isolated(const std::vector<TorsionClass>& classes) {
  std::vector<TorsionClass> out;
  for (const auto& cl : classes) {
    if (cl.reflection) throw InvalidArgument("dedup_isolated takes isolated classes only");
    bool merged = false;
    for (const auto& kept : out) {
      if (kept.proj_order != cl.proj_order || kept.norm != cl.norm) continue;
      if (conjugate_to_power(cl.rep, kept.rep)) {
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(cl);
  }
  return out;
}

}  // namespace picard
