#include "doctest.h"
#include "picard/congruence.hpp"
#include "picard/errors.hpp"
#include "picard/presentation.hpp"
#include "picard/words.hpp"

using namespace picard;

TEST_SUITE("congruence") {
  TEST_CASE("residues") {
    ResidueMap s7 = ResidueMap::isqrt7(), t = ResidueMap::tau();
    CHECK(reduce_mod(OInt::tau(), s7) == 4);
    CHECK(reduce_mod(OInt::isqrt7(), s7) == 0);
    CHECK(reduce_mod(OInt::tau(), t) == 0);
    CHECK(reduce_mod(OInt::taubar(), t) == 1);
    CHECK(reduce_mod(OInt(-3, 5), s7) == ((-3 + 5 * 4) % 7 + 7) % 7);
    CHECK(ResidueMap::by_name("tau").p == 2);
    CHECK_THROWS(ResidueMap::by_name("two"));
  }

  TEST_CASE("matrix orders") {
    ResidueMap s7 = ResidueMap::isqrt7();
    FpMat r = reduce_mod(eval_word("R"), s7);
    CHECK(fp_order(r, 7) == 2);
    CHECK(fp_projective_order(r, 7) == 2);
    CHECK(fp_is_scalar(fp_identity()));
    FpMat t1 = reduce_mod(eval_word("T1"), s7);
    CHECK(fp_order(t1, 7) == 7);
    CHECK(fp_mul(t1, fp_identity(), 7) == t1);
  }

  TEST_CASE("images") {
    auto [a, b] = ab_linear();
    FpMatGroup g7 = image_group({a, b}, ResidueMap::isqrt7());
    CHECK(g7.order() == 336);
    CHECK(g7.center.size() == 1);
    CHECK(g7.scalars == 1);
    FpMatGroup g2 = image_group({a, b}, ResidueMap::tau());
    CHECK(g2.order() == 168);
    CHECK_THROWS_AS(image_group({a, b}, ResidueMap::isqrt7(), 100), CapExceeded);
  }
}
