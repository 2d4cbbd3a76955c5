#include "doctest.h"
#include "picard/mirror.hpp"
#include "picard/words.hpp"

using namespace picard;

TEST_SUITE("mirror") {
  TEST_CASE("mirror of R") {
    MirrorContext ctx = MirrorContext::of_R();
    CHECK(preserves_mirror(eval_group("I"), ctx));
    CHECK_FALSE(preserves_mirror(eval_group("T1"), ctx));
    CHECK(scalar_on_mirror(eval_word("R"), ctx));
    CHECK(order_on_mirror(eval_word("M Tv I"), ctx).has_value());
    MirrorRReport r = verify_mirror_R();
    for (const auto& c : r.checks.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }

  TEST_CASE("orthogonal mirrors of L") {
    MirrorContext ctx = MirrorContext::of_L();
    CHECK(scalar_on_mirror(eval_word("Tt R"), ctx));
    auto two = search_orthogonal_mirrors(ctx, 2, 5);
    auto one = search_orthogonal_mirrors(ctx, 1, 5);
    CHECK(two.size() == 19);
    CHECK(one.size() == 14);
    for (const auto& v : two) {
      CHECK(square_norm(v) == 2);
      CHECK(herm_inner(v, ctx.polar).is_zero());
      CHECK(is_primitive(v));
    }
  }

  TEST_CASE("mirror of L report") {
    MirrorLReport r = verify_mirror_L(5);
    CHECK(r.passing_permutations.empty());
    const Check* s2 = r.checks.find("s2 has infinite order");
    REQUIRE(s2 != nullptr);
    CHECK(s2->passed);
    const Check* par = r.checks.find("s2 is parabolic fixing (-1,1,taubar)");
    REQUIRE(par != nullptr);
    CHECK(par->passed);
  }
}
