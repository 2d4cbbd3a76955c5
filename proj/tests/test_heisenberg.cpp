#include "doctest.h"
#include "picard/heisenberg.hpp"
#include "picard/torsion.hpp"
#include "picard/words.hpp"

using namespace picard;

TEST_SUITE("heisenberg") {
  TEST_CASE("group law") {
    HeisPt zero{KNum(0), Rat(0)};
    HeisPt p{KNum(Rat(1, 3), Rat(2)), Rat(5, 2)};
    CHECK(heis_mul(zero, p) == p);
    CHECK(heis_mul(HeisPt{KNum(1), Rat(1)}, HeisPt{KNum(1), Rat(1)}) == HeisPt{KNum(2), Rat(2)});
    HeisPt a = CuspElt{0, 1, 0, 0}.translation();
    HeisPt b = CuspElt{1, 0, 0, 0}.translation();
    HeisPt comm = heis_mul(heis_mul(a, b), heis_mul(heis_inv(a), heis_inv(b)));
    CHECK(comm == HeisPt{KNum(0), Rat(2)});
    CHECK(eval_group("[Tt,T1]") == eval_group("Tv"));
  }

  TEST_CASE("cusp elements as matrices") {
    CHECK(CuspElt{}.to_matrix() == Mat3::identity());
    CHECK(CuspElt{0, 0, 1, 0}.to_matrix() == Mat3::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
    CHECK(CuspElt{1, 0, 0, 0}.to_matrix() == T1());
    CHECK(to_k(T1()) == heis_matrix(KNum(1), Rat(1)));
    CuspElt c{2, -1, 1, 3};
    CHECK(CuspElt::from_matrix(c.to_matrix()) == c);
    CHECK((c * c.inverse()) == CuspElt{});
  }

  TEST_CASE("reduction into the prism") {
    for (HeisPt p : {HeisPt{KNum(Rat(2), Rat(3)), Rat(5)}, HeisPt{KNum(-1), Rat(-1)}}) {
      PrismReduction r = reduce_to_prism(p);
      CHECK(prism_membership(r.point).location != PrismMembership::Outside);
      CHECK(r.elt.act(p) == r.point);
    }
    HeisPt inside{KNum(Rat(0), Rat(1, 2)), Rat(1, 2)};
    PrismReduction r = reduce_to_prism(inside);
    CHECK(r.elt == CuspElt{});
    CHECK(r.point == inside);
  }

  TEST_CASE("prism facets") {
    PrismMembership m = prism_membership(HeisPt{KNum(0), Rat(1)});
    CHECK(m.location == PrismMembership::Boundary);
    CHECK(m.facets.size() == 2);
    CHECK(prism_membership(HeisPt{KNum(2), Rat(1)}).location == PrismMembership::Outside);
  }

  TEST_CASE("cusp overlaps") {
    auto overlaps = enumerate_cusp_overlaps();
    auto has = [&](const CuspElt& c) {
      for (const auto& o : overlaps) {
        if (o.elt == c) return true;
      }
      return false;
    };
    CHECK(has(CuspElt{}));
    CHECK(has(CuspElt{0, 0, 1, 0}));
    CHECK(has(CuspElt::from_matrix(eval_word("Tt R"))));
    int torsion = 0;
    for (const auto& o : overlaps) {
      auto ord = projective_order(o.elt.to_group());
      if (ord && *ord > 1) ++torsion;
      HeisPt w{KNum(o.witness[0], o.witness[1]), o.witness[2]};
      CHECK(prism_membership(w).location != PrismMembership::Outside);
      CHECK(prism_membership(o.elt.act(w)).location != PrismMembership::Outside);
    }
    CHECK(torsion == 5);
  }

  TEST_CASE("cusp torsion") {
    CHECK(projective_order(eval_group("R")) == 2);
    CHECK(projective_order(eval_group("Tt R")) == 2);
    CHECK_FALSE(projective_order(eval_group("T1 R")).has_value());
    CHECK(eval_group("(T1 R)^2") == eval_group("Tv"));
    int with_torsion = 0;
    for (const auto& f : cusp_torsion_classes()) {
      if (!f.has_torsion) continue;
      ++with_torsion;
      CHECK(projective_order(f.element) == 2);
    }
    CHECK(with_torsion >= 2);
  }
}
