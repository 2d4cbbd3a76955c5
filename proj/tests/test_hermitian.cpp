#include "doctest.h"
#include "picard/hermitian.hpp"
#include "picard/words.hpp"

using namespace picard;

namespace {
Vec3K v3(KNum a, KNum b, KNum c) { return {a, b, c}; }
}  // namespace

TEST_SUITE("hermitian") {
  TEST_CASE("square norms") {
    CHECK(herm_inner(v3(0, 1, 0), v3(0, 1, 0)) == KNum(1));
    CHECK(herm_inner(v3(1, 0, 1), v3(1, 0, 1)) == KNum(2));
    CHECK(herm_inner(v3(-KNum::taubar(), 0, 1), v3(-KNum::taubar(), 0, 1)) == KNum(-1));
  }

  TEST_CASE("primitive representatives") {
    CHECK(primitive_rep(v3(2, 0, 2)) == Vec3O{1, 0, 1});
    KNum t = KNum::tau();
    Vec3O p = primitive_rep(v3(t, t * t, 0));
    CHECK(ProjPoint(p) == ProjPoint(Vec3O{1, OInt::tau(), 0}));
    CHECK(is_primitive(p));
    Vec3O q = primitive_rep(v3(Rat(1, 2), 0, t / KNum(2)));
    CHECK(ProjPoint(q) == ProjPoint(Vec3O{1, 0, OInt::tau()}));
    CHECK(is_primitive(q));
  }

  TEST_CASE("depths of generator centers") {
    CHECK(depth(v3(0, 0, 1)) == 1);
    CHECK(depth(v3(2, KNum::taubar(), -KNum::tau())) == 2);
    CHECK(depth(v3(KNum::isqrt7(), 0, 2)) == 4);
  }

  TEST_CASE("horospherical coordinates") {
    HoroCoords a = horo_coords(v3(-KNum::taubar(), 0, 1));
    CHECK(a == HoroCoords{KNum(0), Rat(1), Rat(1)});
    HoroCoords b = horo_coords(v3(-1, 0, 1));
    CHECK(b == HoroCoords{KNum(0), Rat(0), Rat(2)});
    CHECK(horo_coords(v3(0, 0, 1)) == HoroCoords{KNum(0), Rat(0), Rat(0)});
    for (const auto& h : {a, b}) CHECK(horo_coords(lift(h)) == h);
    CHECK(ProjPoint(lift(a)) == ProjPoint(v3(-KNum::taubar(), 0, 1)));
  }

  TEST_CASE("membership in the group") {
    CHECK(is_in_gamma(to_k(eval_word("A1"))));
    CHECK(is_in_gamma(to_k(eval_word("R"))));
    MatK d{KNum(2), 0, 0, 0, KNum(1), 0, 0, 0, KNum(Rat(1, 2))};
    CHECK_FALSE(is_in_gamma(d));
  }

  TEST_CASE("distance invariant") {
    CHECK(dist_invariant(v3(-1, 0, 1), v3(-1, 0, 1)) == 1);
    CHECK(dist_invariant(v3(-1, 0, 1), v3(-2, 0, 1)) == Rat(9, 8));
  }

  TEST_CASE("projective elements") {
    Mat3 m = eval_word("I T1 R");
    CHECK(GroupElt(m) == GroupElt(-m));
    CHECK(m.is_unitary());
    CHECK((m * m.unitary_inverse()).is_pm_identity());
    CHECK(GroupElt(m).pow(-3) == GroupElt(m).inverse().pow(3));
    Mat3 r = make_reflection(Vec3O{1, 0, 1});
    CHECK(r.is_unitary());
    CHECK((r * r).is_pm_identity());
  }
}
