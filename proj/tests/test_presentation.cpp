#include "doctest.h"
#include "picard/presentation.hpp"
#include "picard/words.hpp"

using namespace picard;

TEST_SUITE("presentation") {
  TEST_CASE("relators") {
    CHECK(presentation_relators().size() == 10);
    CheckList r = verify_relators();
    for (const auto& c : r.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
    auto [a, b] = ab_matrices();
    CHECK(b == eval_group("Tt R"));
    auto [al, bl] = ab_linear();
    CHECK(GroupElt(al) == a);
    CHECK(GroupElt(bl) == b);
  }

  TEST_CASE("word evaluation") {
    CHECK(eval_group("c") == eval_group("a b"));
    CHECK(eval_group("d") == eval_group("b a"));
    CHECK(eval_group("(a b)^-1") == eval_group("b^-1 a^-1"));
    CHECK(eval_group("[T1,Tt]") == eval_group("T1 Tt T1^-1 Tt^-1"));
    CHECK(eval_group("a b a b a") != eval_group("a d"));
    CHECK_THROWS(eval_group("a q"));
    CHECK(parse_matrix("1,0,0,0,1,0,0,0,1") == Mat3::identity());
  }

  TEST_CASE("torsion rows") {
    for (const auto& r : verify_rows()) {
      INFO(r.row->word);
      for (const auto& c : r.checks.checks) {
        INFO(c.name);
        CHECK(c.passed);
      }
    }
  }

  TEST_CASE("class catalog") {
    for (const auto& r : verify_class_rows()) {
      INFO(r.row->word);
      for (const auto& c : r.checks.checks) {
        INFO(c.name);
        CHECK(c.passed);
      }
    }
  }

  TEST_CASE("reflection identities") {
    const auto& ids = reflection_identities();
    CheckList r = verify_reflection_identities();
    REQUIRE(r.checks.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!ids[i].printed) CHECK(r.checks[i].passed);
    }
  }
}
