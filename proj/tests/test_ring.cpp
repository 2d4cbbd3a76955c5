#include <random>

#include "doctest.h"
#include "picard/errors.hpp"
#include "picard/field.hpp"
#include "picard/ring.hpp"

using namespace picard;

TEST_SUITE("ring") {
  TEST_CASE("multiplication") {
    KNum t = KNum::tau();
    CHECK(t * t == KNum(Rat(-2), Rat(1)));
    CHECK(t * KNum::taubar() == KNum(2));
    CHECK(KNum(Rat(2), Rat(-1)) * KNum(Rat(1), Rat(1)) == KNum(4));
    CHECK(KNum::isqrt7() * KNum::isqrt7() == KNum(-7));
  }

  TEST_CASE("norms") {
    CHECK(KNum(0).norm() == 0);
    CHECK(KNum::tau().norm() == 2);
    CHECK(KNum::isqrt7().norm() == 7);
    CHECK(OInt::isqrt7().norm() == 7);
    CHECK(KNum(Rat(3), Rat(5)).conj().norm() == KNum(Rat(3), Rat(5)).norm());
  }

  TEST_CASE("gcd") {
    CHECK(o_gcd(OInt::isqrt7(), OInt(2)).is_unit());
    OInt g = o_gcd(OInt(0, 2), OInt(0, 4));
    CHECK(o_divides(g, OInt(0, 2)));
    CHECK(o_divides(OInt(0, 2), g));
    CHECK(o_gcd(OInt::tau(), OInt::taubar()).is_unit());
    CHECK_THROWS_AS(o_gcd(OInt(0), OInt(0)), InvalidArgument);
  }

  TEST_CASE("division with remainder") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
      OInt x(d(rng), d(rng)), y(d(rng), d(rng));
      if (y.is_zero()) continue;
      DivMod qr = o_divmod(x, y);
      CHECK(qr.q * y + qr.r == x);
      CHECK(qr.r.norm() < y.norm());
    }
    CHECK(o_exact_div(OInt(4), OInt::tau()) == OInt::taubar() * OInt(2));
    CHECK_THROWS(o_exact_div(OInt(1), OInt(2)));
  }

  TEST_CASE("overflow is detected") {
    OInt big(INT64_MAX / 2, 0);
    CHECK_THROWS_AS(big * big, ArithmeticOverflow);
    CHECK_THROWS_AS(OInt(INT64_MAX) + OInt(1), ArithmeticOverflow);
  }

  TEST_CASE("parsing round trip") {
    for (const char* s : {"0", "tau", "taubar", "isqrt7", "-tau-2", "1/2+3/4*tau", "-7"}) {
      KNum x = parse_knum(s);
      CHECK(parse_knum(to_string(x)) == x);
    }
    CHECK(parse_knum("taubar") == KNum::taubar());
    CHECK(parse_knum("isqrt7") == KNum(Rat(-1), Rat(2)));
  }

  TEST_CASE("floors") {
    CHECK(floor(Rat(7, 2)) == 3);
    CHECK(floor(Rat(-7, 2)) == -4);
    const NumberField* gauss = NumberField::root_of_unity({KNum(1), KNum(0), KNum(1)}, 1, 4);
    FNum i = FNum::generator(gauss);
    FNum sqrt7 = -i * FNum(KNum::isqrt7());
    CHECK(sqrt7 * sqrt7 == FNum(7));
    CHECK(sqrt7.real_floor() == 2);
    CHECK((-sqrt7).real_floor() == -3);
  }
}
