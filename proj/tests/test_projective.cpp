#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "bsinf/errors.hpp"
#include "bsinf/invariant.hpp"
#include "bsinf/parser.hpp"
#include "bsinf/projective.hpp"
#include "corpus.hpp"

using namespace bsinf;

TEST_CASE("directions and points are normalized") {
  const DirectionS1 d(2, 4);
  CHECK(d.u() == 1);
  CHECK(d.v() == 2);
  CHECK((-d).to_string() == "(-1, -2)");
  CHECK(d.antipodal_to(-d));
  CHECK_THROWS(DirectionS1(0, 0));
  CHECK(ProjPointAtInfinity(-2, 6).to_string() == "[1:-3]");
  CHECK(ProjPointAtInfinity(0, -5).to_string() == "[0:1]");
  const auto [p, m] = direction_pair(ProjPointAtInfinity(1, -1));
  CHECK(p == DirectionS1(1, -1));
  CHECK(m == DirectionS1(-1, 1));
  const auto [u, v] = DirectionS1(3, 4).unit();
  CHECK(u == doctest::Approx(0.6));
  CHECK(v == doctest::Approx(0.8));
}

TEST_CASE("leading forms and points at infinity") {
  CHECK(leading_form(parse_poly("y^2 - x^3")) == parse_poly("-x^3"));
  CHECK(leading_form(parse_poly("x^2 - y^2 - y^3")) == parse_poly("-y^3"));
  CHECK(leading_form(parse_poly("x^2 + y^2 - 1")) == parse_poly("x^2 + y^2"));
  CHECK_THROWS_AS(leading_form(BivarPoly::constant(2)), DegreeZero);

  using P = ProjPointAtInfinity;
  CHECK(points_at_infinity(parse_poly("y^2 - x^3")) == std::vector<P>{P(0, 1)});
  CHECK(points_at_infinity(parse_poly("x^2 + y^2 - 1")).empty());
  CHECK(points_at_infinity(parse_poly("y^2 - x^2")) == std::vector<P>{P(1, -1), P(1, 1)});
  CHECK(points_at_infinity(parse_poly("x*y*(2*x - 3*y) + 1")) == std::vector<P>{P(0, 1), P(1, 0), P(3, 2)});
  CHECK_THROWS_AS(points_at_infinity(parse_poly("x^2 - 2*y^2 + x")), UnsupportedCurve);
}

TEST_CASE("chart germs") {
  // Hand homogenization: y^2 - x^3 at [0:1] has germ z = w^3 up to the sign of w.
  const GermChart cusp = chart_germ(parse_poly("y^2 - x^3"), ProjPointAtInfinity(0, 1));
  CHECK(cusp.germ == parse_poly("x^3 + y"));  // printed in (w, z) as w^3 + z
  CHECK(cusp.germ.to_string('w', 'z') == "w^3 + z");
  CHECK(cusp.plus_direction == DirectionS1(0, 1));

  const GermChart par = chart_germ(parse_poly("(y-x)^2 - (y+x)"), ProjPointAtInfinity(1, 1));
  CHECK(par.germ.to_string('w', 'z') == "w^2 + w*z - 2*z");
  CHECK(par.plus_direction == DirectionS1(1, 1));
  // chart rows are unimodular
  const auto& m = par.chart_map;
  CHECK(m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1);

  CHECK_THROWS_AS(chart_germ(parse_poly("y^2 - x^3"), ProjPointAtInfinity(1, 0)), PointNotOnCurve);
}

TEST_CASE("structural properties on the corpus") {
  std::vector<std::string> texts{"y^2 - x^3", "y^2 - x^5", "x^2 - y^2 - y^3", "x*y - 1", "(y-x)^2 - (y+x)",
                                 "x^3 - x*y + 5", "y*(y-x)*(y-2*x) + x + 1", "x^4 + y^4 - x*y^3 + 2"};
  for (const std::string& t : texts) {
    CAPTURE(t);
    const BivarPoly f = parse_poly(t);
    const auto pts = points_at_infinity(f);
    CHECK(static_cast<int>(pts.size()) <= f.degree());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const ProjPointAtInfinity& c : pts) {
      CHECK(leading_form(f)(Rational(c.alpha()), Rational(c.beta())) == 0);
      const GermChart g = chart_germ(f, c);
      CHECK(g.germ(0, 0) == 0);
      CHECK(!g.germ.specialize(Var::second, 0).is_zero());  // z does not divide the germ
    }
  }
}

TEST_CASE("signed counts transport under unimodular maps") {
  // Branch directions of f o L are M^-1 applied to those of f, so mapping
  // them back by M must reproduce f's (direction, count) multiset exactly,
  // including the plus/minus split.
  std::mt19937_64 rng(424242);
  const std::vector<std::string> texts{"y^2 - x^3", "((y-x)-1)*((y-x)^2-(y+x))", "x*y - 1", "x^3 - x*y + 5",
                                       "(y-2*x)^2 + 3*(y+2*x)"};
  auto signature = [](const InfinityReport& r, const AffineMap* m) {
    std::map<std::pair<std::string, std::size_t>, int> s;
    for (const DirectionCount& d : r.directions()) {
      DirectionS1 dir = d.direction;
      if (m) dir = DirectionS1(m->a * dir.u() + m->b * dir.v(), m->c * dir.u() + m->d * dir.v());
      ++s[{dir.to_string(), d.count}];
    }
    return s;
  };
  int reversing = 0;
  for (const std::string& t : texts) {
    const BivarPoly f = parse_poly(t);
    const auto base = signature(k_at_infinity(f), nullptr);
    for (int i = 0; i < 8; ++i) {
      const AffineMap m = bsinf::testing::random_unimodular(rng);
      if (m.det() < 0) ++reversing;
      CAPTURE(t);
      CHECK(signature(k_at_infinity(compose(f, m)), &m) == base);
    }
  }
  CHECK(reversing > 0);
}
