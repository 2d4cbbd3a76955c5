#include "doctest.h"
#include "picard/errors.hpp"
#include "picard/report.hpp"

using namespace picard;

TEST_SUITE("report") {
  TEST_CASE("configuration") {
    Config c;
    CHECK_NOTHROW(c.validate());
    c.closure_cap = 0;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = Config{};
    c.precision_bits = 5000;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
  }

  TEST_CASE("point parsing") {
    Vec3K p = parse_point("[-taubar, 0, 1]");
    CHECK(p == Vec3K{-KNum::taubar(), 0, 1});
    CHECK(parse_point("\"1-isqrt7\",tau,2")[0] == KNum(1) - KNum::isqrt7());
    CHECK_THROWS(parse_point("[1,2]"));
  }

  TEST_CASE("documents are deterministic") {
    CHECK(cusp_torsion_report().dump() == cusp_torsion_report().dump());
    Json a = ford_reduce_report(Vec3K{-1, 0, 1}, Config{});
    CHECK(a.dump() == ford_reduce_report(Vec3K{-1, 0, 1}, Config{}).dump());
    CHECK(a["in_omega"] == true);
    CHECK_THROWS_AS(ford_reduce_report(Vec3K{1, 0, 1}, Config{}), InvalidArgument);
    Json d = depth_report(12);
    CHECK(d["realizable"] == Json::array({1, 2, 4, 7, 8, 9, 11}));
  }

  TEST_CASE("cusp torsion document") {
    Json j = cusp_torsion_report();
    CHECK(j["count"] == 5);
  }
}
