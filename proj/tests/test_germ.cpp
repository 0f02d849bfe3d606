#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bsinf/algebra.hpp"
#include "bsinf/errors.hpp"
#include "bsinf/germ.hpp"
#include "bsinf/parser.hpp"
#include "bsinf/projective.hpp"

using namespace bsinf;

namespace {

// Germs are written in x, y and read as w, z.
GermChart G(const char* text) { return GermChart::from_germ(parse_poly(text)); }

struct Sampled {
  std::size_t plus = 0, minus = 0;
};

// Independent count: sign changes of g at 2^14 equally spaced angles on the
// circle of radius eps, signs taken in exact arithmetic at rounded sample points
// pushed back onto the circle. Intersections are assigned to the sign of z at
// the midpoint of the bracketing pair.
Sampled sampled_count(const BivarPoly& g, double eps, int n = 1 << 14) {
  Sampled s;
  auto sign_at = [&](double th) {
    const Rational w(eps * std::cos(th)), z(eps * std::sin(th));
    return sgn(g(w, z));
  };
  int prev = sign_at(0);
  const double step = 2 * M_PI / n;
  for (int k = 1; k <= n; ++k) {
    const int cur = sign_at(k * step);
    if (cur != 0 && prev != 0 && cur != prev) {
      const double mid = (k - 0.5) * step;
      (std::sin(mid) > 0 ? s.plus : s.minus)++;
    }
    if (cur != 0) prev = cur;
  }
  return s;
}

}  // namespace

TEST_CASE("circle solutions at fixed radii") {
  const Rational half = make_rational(1, 2);
  CHECK(count_circle_solutions(parse_poly("y - x"), half) == 2);
  CHECK(count_circle_solutions(parse_poly("y^2 + x^4"), half) == 0);
  CHECK(count_circle_solutions(parse_poly("y - x^3"), half) == 2);
  const CircleSolutions axis = circle_solutions(parse_poly("y - x + 1/2"), half);  // passes (1/2, 0)
  CHECK(axis.on_axis == 1);
  CHECK_THROWS_AS(circle_solutions(parse_poly("x^2 + y^2 - 1/4"), half), NonTransverseCircle);
  CHECK_THROWS(circle_solutions(parse_poly("y - x"), 0));
}

TEST_CASE("circle restriction is the curve on the rational parametrization") {
  const BivarPoly g = parse_poly("x^3 - 2*x*y + y^2 - 5*x^2*y");
  const Rational eps = make_rational(1, 3);
  const UnivarPoly p = circle_restriction(g, eps);
  for (int k = -6; k <= 6; ++k) {
    const Rational t = make_rational(k, 4);
    const Rational den = 1 + t * t;
    const Rational w = eps * (1 - t * t) / den, z = eps * 2 * t / den;
    CHECK(sgn(p(t)) == sgn(g(w, z)));
  }
}

TEST_CASE("germ examples") {
  CHECK(critical_radius_bound(G("y - x")).bound == 1);
  const CriticalRadius cusp = critical_radius_bound(G("y^2 - x^3"));
  CHECK(cusp.certified);
  CHECK(cusp.bound > 0);
  CHECK(cusp.bound <= 1);

  auto counts = [](const char* text) {
    const SignedBranchCount n = count_half_branches(G(text));
    return std::pair{n.plus, n.minus};
  };
  CHECK(counts("y - x^3") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(counts("x^2 - 2*y - x*y") == std::pair<std::size_t, std::size_t>{2, 0});
  CHECK(counts("y^2 + x^4") == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(counts("y^2 - x^3") == std::pair<std::size_t, std::size_t>{1, 1});

  // v^2 - 2z - vz: the circle count at the returned radius is 2 by sampling too.
  const GermChart par = G("x^2 - 2*y - x*y");
  const CriticalRadius r = critical_radius_bound(par);
  const Sampled s = sampled_count(par.germ, to_double(r.bound));
  CHECK(s.plus == 2);
  CHECK(s.minus == 0);
}

TEST_CASE("monomial families") {
  const BivarPoly w = BivarPoly::x(), z = BivarPoly::y();
  for (unsigned k = 1; k <= 4; ++k) {
    CAPTURE(k);
    auto check = [](const BivarPoly& g, std::size_t plus, std::size_t minus) {
      const SignedBranchCount n = count_half_branches(GermChart::from_germ(g));
      CHECK(n.certified);
      CHECK(n.plus == plus);
      CHECK(n.minus == minus);
      CHECK(n.total() == count_circle_solutions(g, n.epsilon_used));
    };
    check(z - pow(w, 2 * k), 2, 0);
    check(z - pow(w, 2 * k + 1), 1, 1);
    check(z * z - pow(w, 2 * k + 1), 1, 1);
    check(z * z - pow(w, 2 * k), 2, 2);
  }
}

TEST_CASE("circles about the origin stay outside the certified radius") {
  // The circle w^2 + z^2 = 1/4 is a component; the bound must keep below it.
  const GermChart g = G("(x^2 + y^2 - 1/4)*(y - 2*x)");
  const CriticalRadius r = critical_radius_bound(g);
  CHECK(r.certified);
  CHECK(r.bound < make_rational(1, 2));
  const SignedBranchCount n = count_half_branches(g);
  CHECK(n.plus == 1);
  CHECK(n.minus == 1);
}

TEST_CASE("certified radius against sampling on random germs") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> coef(-3, 3), deg(1, 4);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    BivarPoly g;
    const int d = deg(rng) + 1;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j)
        if (i + j > 0) g += BivarPoly::monomial(coef(rng), i, j);
    if (g.is_zero() || g.specialize(Var::second, 0).is_zero() || g.is_constant()) continue;
    const BivarPoly sq = squarefree_part(g);
    const GermChart chart = GermChart::from_germ(sq);
    const CriticalRadius r = critical_radius_bound(chart);
    const SignedBranchCount n = count_half_branches(chart);
    CAPTURE(sq.to_string('w', 'z'));
    const double eps = to_double(r.bound);
    for (double f : {1.0, 0.5, 1.0 / 7}) {
      const Sampled s = sampled_count(sq, eps * f);
      CHECK(s.plus == n.plus);
      CHECK(s.minus == n.minus);
    }
    const CircleSolutions at7 = circle_solutions(sq, r.bound / 7);
    CHECK(at7.positive == n.plus);
    CHECK(at7.negative == n.minus);
    CHECK(at7.on_axis == 0);
    ++tested;
  }
  CHECK(tested > 30);
}

TEST_CASE("epsilon override and preconditions") {
  const SignedBranchCount n = count_half_branches_at(G("y - x^2"), make_rational(1, 10));
  CHECK(!n.certified);
  CHECK(n.plus == 2);
  CHECK_THROWS(critical_radius_bound(G("y - x + 1")));  // misses the origin
  CHECK_THROWS(critical_radius_bound(G("y*(y - x)")));  // divisible by z
  UncertifiedCount u(SignedBranchCount{1, 1, make_rational(1, 4), false});
  CHECK(u.count().total() == 2);
}
