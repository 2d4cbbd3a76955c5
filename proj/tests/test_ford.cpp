#include <set>

#include "doctest.h"
#include "picard/ford.hpp"
#include "picard/words.hpp"

using namespace picard;

namespace {
Vec3F fixed_point() { return to_f(Vec3K{-KNum::taubar(), 0, 1}); }
}  // namespace

TEST_SUITE("ford") {
  TEST_CASE("generator table") {
    const auto& gens = generator_table();
    REQUIRE(gens.size() == 14);
    std::set<std::int64_t> depths;
    for (const auto& g : gens) {
      CHECK(g.elt.matrix().is_unitary());
      CHECK(gens[g.inverse].elt == g.elt.inverse());
      depths.insert(depth(to_k(g.elt.matrix().column(0))));
      IsomSphere s = IsomSphere::of(g.elt);
      HoroCoords h = horo_coords(to_k(g.elt.matrix().column(0)));
      CHECK(s.center == HeisPt{h.z, h.s});
      CHECK(s.r4 * s.a31norm == 4);
    }
    CHECK(depths == std::set<std::int64_t>{1, 2, 4, 7});
    CHECK_THROWS(IsomSphere::of(eval_group("T1")));
  }

  TEST_CASE("Cygan distance") {
    HoroCoords o{KNum(0), Rat(0), Rat(0)};
    CHECK(cygan_dist4(o, o) == 0);
    CHECK(cygan_dist4(o, HoroCoords{KNum(0), Rat(2), Rat(0)}) == 28);
    CHECK(cygan_dist4(o, HoroCoords{KNum(1), Rat(0), Rat(0)}) == 1);
  }

  TEST_CASE("Ford inequality") {
    for (const auto& g : generator_table()) {
      CHECK(ford_side(to_f(lift(HoroCoords{KNum(0), Rat(0), Rat(100)})), g.elt) == Side::inside);
    }
    CHECK(ford_side(fixed_point(), eval_group("A6")) == Side::boundary);
    CHECK(ford_side(fixed_point(), eval_group("T1 A1 T1^-1")) == Side::boundary);
    HoroCoords h = horo_coords(Vec3K{-KNum::taubar(), 0, 1});
    CHECK(sphere_membership(h, IsomSphere::of(eval_group("A6"))) == Side::boundary);
    CHECK(sphere_membership(h, IsomSphere::of(eval_group("T1 A1 T1^-1"))) == Side::boundary);
    CHECK(sphere_membership(HoroCoords{KNum(0), Rat(0), Rat(1)}, IsomSphere::of(eval_group("A1"))) == Side::outside);
  }

  TEST_CASE("cone translates") {
    auto e1 = enumerate_cone_translates(1);
    CHECK_FALSE(e1.empty());
    CHECK(std::find(e1.begin(), e1.end(), CuspElt{}) != e1.end());
    for (int j = 1; j <= 14; ++j) CHECK_FALSE(enumerate_cone_translates(j).empty());
  }

  TEST_CASE("spheres through a point") {
    auto hits = spheres_containing(fixed_point());
    CHECK(hits.size() == 3);
    for (const auto& h : hits) CHECK(h.side == Side::boundary);
    CHECK(spheres_containing(to_f(lift(HoroCoords{KNum(0), Rat(1), Rat(50)}))).empty());
  }

  TEST_CASE("reduction into the domain") {
    Vec3F x = to_f(lift(HoroCoords{KNum(Rat(1, 4), Rat(1, 4)), Rat(1), Rat(2)}));
    DomainReduction r = reduce_to_domain(x);
    CHECK(r.elt.is_identity());
    CHECK(r.steps == 0);
    GroupElt g = eval_group("A2 T1 A6 R I");
    DomainReduction back = reduce_to_domain(g.matrix().apply(x));
    CHECK(ProjPoint(back.point) == ProjPoint(x));
    CHECK(back.elt * g == GroupElt());
    CHECK(in_omega(back.point));
    CHECK_THROWS(reduce_to_domain(g.matrix().apply(x), 1));
  }

  TEST_CASE("null vectors by depth") {
    for (std::int64_t d : {1, 2, 4, 7, 8, 9, 11}) {
      auto v = null_vector_of_depth(d);
      REQUIRE(v.has_value());
      CHECK(square_norm(*v) == 0);
      CHECK(is_primitive(*v));
      CHECK((*v)[2].norm() == d);
    }
    for (std::int64_t d : {3, 5, 6, 10, 12, 13, 15}) CHECK_FALSE(null_vector_of_depth(d).has_value());
  }
}
