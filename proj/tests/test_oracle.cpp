#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bsinf/oracle.hpp"
#include "bsinf/parser.hpp"

using namespace bsinf;

namespace {

bool near(const OracleDirection& d, double x, double y, double tol = 1e-6) { return std::hypot(d.x - x, d.y - y) <= tol; }

}  // namespace

TEST_CASE("oracle examples") {
  // The cusp branches are y = +-|x|^(3/2) solved for x: x = |y|^(2/3).
  const OracleReport cusp = oracle_k(parse_poly("y^2 - x^3"));
  CHECK(cusp.stable);
  REQUIRE(cusp.directions.size() == 2);
  CHECK(near(cusp.directions[0], 0, 1));
  CHECK(near(cusp.directions[1], 0, -1));
  CHECK(cusp.counts() == std::vector<std::size_t>{1, 1});

  const OracleReport circle = oracle_k(parse_poly("x^2 + y^2 - 1"));
  CHECK(circle.stable);
  CHECK(circle.directions.empty());

  // One line arc per side plus both parabola arms on the (1,1) side.
  const OracleReport mixed = oracle_k(parse_curve("((y-x)-1)*((y-x)^2-(y+x))").factors);
  CHECK(mixed.stable);
  REQUIRE(mixed.directions.size() == 2);
  const double r = std::sqrt(0.5);
  CHECK(near(mixed.directions[0], r, r));
  CHECK(mixed.directions[0].count == 3);
  CHECK(near(mixed.directions[1], -r, -r));
  CHECK(mixed.directions[1].count == 1);
  // The expanded product gives the same answer.
  CHECK(oracle_k(parse_poly("((y-x)-1)*((y-x)^2-(y+x))")).counts() == mixed.counts());
}

TEST_CASE("crossings at a single radius") {
  const std::vector<double> c = circle_crossings(parse_poly("y - x"), 10);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == doctest::Approx(M_PI / 4).epsilon(1e-12));
  CHECK(c[1] == doctest::Approx(5 * M_PI / 4).epsilon(1e-12));
  CHECK(circle_crossings(parse_poly("x^2 + y^2 - 4"), 10).empty());
}

TEST_CASE("determinism") {
  const BivarPoly f = parse_poly("x^3 - x*y + 5");
  const OracleReport a = oracle_k(f), b = oracle_k(f);
  REQUIRE(a.directions.size() == b.directions.size());
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    CHECK(a.directions[i].x == b.directions[i].x);
    CHECK(a.directions[i].y == b.directions[i].y);
    CHECK(a.directions[i].count == b.directions[i].count);
  }
  CHECK(a.crossings == b.crossings);
  CHECK(a.stable == b.stable);
}

TEST_CASE("monotone refinement in the angular grid") {
  for (const char* t : {"y^2 - x^3", "x^3 - x*y + 5", "(y-x)^2 - (y+x)", "x^2 - y^2 - y^3", "y*(y-x)*(y+x) - 1"}) {
    CAPTURE(t);
    const BivarPoly f = parse_poly(t);
    OracleConfig coarse, fine;
    coarse.angular_grid = 1 << 13;
    fine.angular_grid = 1 << 14;
    const OracleReport a = oracle_k(f, coarse), b = oracle_k(f, fine);
    for (std::size_t i = 0; i < a.crossings.size(); ++i) CHECK(b.crossings[i] >= a.crossings[i]);
  }
}

TEST_CASE("unstable when branches appear late") {
  // The line y = 400000 first meets the sample circles at R = 2^19.
  const OracleReport r = oracle_k(parse_poly("y - 400000"));
  CHECK(!r.stable);
}

TEST_CASE("Wynn extrapolation") {
  std::vector<double> geo;
  for (int k = 0; k < 8; ++k) geo.push_back(1.0 + 3.0 * std::pow(0.5, k));
  CHECK(wynn_limit(geo) == doctest::Approx(1.0).epsilon(1e-10));
  std::vector<double> two;
  for (int k = 0; k < 10; ++k) two.push_back(2.0 + std::pow(0.8, k) - 0.5 * std::pow(0.5, k));
  CHECK(wynn_limit(two) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(wynn_limit({1.0, 1.0, 1.0}) == 1.0);
  CHECK(wynn_limit({4.0}) == 4.0);
  CHECK_THROWS(wynn_limit({}));
}

TEST_CASE("config validation") {
  OracleConfig c;
  CHECK_NOTHROW(c.validate());
  c.stability_window = 1;
  CHECK_THROWS(c.validate());
  c = OracleConfig{};
  c.radius_exp_max = 2;
  CHECK_THROWS(c.validate());
  c = OracleConfig{};
  c.cluster_tol = 0;
  CHECK_THROWS(c.validate());
  CHECK_THROWS(oracle_k(BivarPoly::constant(3)));
}
