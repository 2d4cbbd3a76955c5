#include "doctest.h"
#include "picard/errors.hpp"
#include "picard/torsion.hpp"
#include "picard/words.hpp"

using namespace picard;

TEST_SUITE("torsion") {
  TEST_CASE("orders") {
    CHECK(projective_order(GroupElt()) == 1);
    CHECK(projective_order(eval_group("R")) == 2);
    CHECK(projective_order(eval_group("I R T1")) == 7);
    CHECK_FALSE(projective_order(eval_group("T1")).has_value());
  }

  TEST_CASE("elliptic types") {
    EllipticType r = classify_elliptic(eval_group("R"), 2);
    CHECK(r.reflection);
    CHECK(r.locus == ProjPoint(Vec3O{0, 1, 0}));
    CHECK_THROWS_AS(classify_elliptic(eval_group("R"), 3), InvalidArgument);
    EllipticType s = classify_elliptic(eval_group("I R T1"), 7);
    CHECK_FALSE(s.reflection);
    CHECK_FALSE(s.locus.is_rational());
    CHECK(s.locus.norm_sign() < 0);
  }

  TEST_CASE("cubic fixed point floors") {
    EllipticType s = classify_elliptic(eval_group("I R T1"), 7);
    HoroAlg h = horo_coords(s.locus.coords());
    CHECK((h.s * FNum(1000)).real_floor() == -592);
    CHECK((h.u * FNum(1000)).real_floor() == 939);
    CHECK(h.s.real_floor() == -1);
    CHECK(h.u.real_floor() == 0);
  }

  TEST_CASE("finite groups") {
    FiniteGroup g = finite_group({eval_group("A6"), eval_group("T1 A1 T1^-1"), eval_group("T1^-1 Tv A1 Tv^-1 T1"), eval_group("R T1 I T1^-1")});
    CHECK(g.projective_order() == 8);
    CHECK(g.elements.front().is_identity());
    CHECK_THROWS_AS(finite_group({eval_group("T1")}, 50), CapExceeded);
    FiniteGroup st = stabilizer(ProjPoint(Vec3K{-KNum::taubar(), 0, 1}));
    CHECK(st.projective_order() == 8);
    CHECK(st.linear_order == 16);
    CHECK(st.reflections.size() == 4);
  }

  TEST_CASE("conjugacy") {
    GroupElt g = eval_group("R");
    GroupElt h = eval_group("T1 Tt R T1^-1 R I R I");
    auto c = conjugate_to_power(g, eval_group("I") * g * eval_group("I"));
    REQUIRE(c.has_value());
    CHECK(c->conjugator * g * c->conjugator.inverse() == (eval_group("I R I")).pow(c->power));
    GroupElt x = eval_group("I R T1");
    GroupElt y = h * x * h.inverse();
    auto d = conjugate_to_power(x, y);
    REQUIRE(d.has_value());
    CHECK(d->conjugator * x * d->conjugator.inverse() == y.pow(d->power));
    CHECK_FALSE(conjugate_to_power(eval_group("R"), eval_group("Tt R")).has_value());
  }

  TEST_CASE("worked stabilizer examples") {
    StabilizerExamples ex = verify_stabilizer_examples();
    for (const auto& c : ex.checks.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
}
