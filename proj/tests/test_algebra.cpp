#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsinf/algebra.hpp"
#include "bsinf/errors.hpp"
#include "bsinf/parser.hpp"

using namespace bsinf;

namespace {

UnivarPoly upoly(const char* text) { return parse_expression(text).specialize(Var::second, 0); }

// Plain Gaussian elimination over Q on the Sylvester matrix of two univariate
// polynomials; independent of the resultant module's evaluation scheme.
Rational sylvester_det(const UnivarPoly& f, const UnivarPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeff(n - k);
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && a[piv][c] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < size; ++r) {
      const Rational factor = a[r][c] / a[c][c];
      for (int k = c; k < size; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("resultants match the reference values") {
  // Reference values from sympy.resultant.
  struct Case {
    const char *f, *g, *res_y, *res_x;
  };
  const Case cases[] = {
      {"y^2 - x^3", "2*y - x", "-4*x^3 + x^2", "-8*y^3 + y^2"},
      {"x^2 + y^2 - 1", "x*y - 2", "x^4 - x^2 + 4", "y^4 - y^2 + 4"},
      {"y^3 - x*y + 1", "y^2 + x^2*y - 3", "-x^6 + 3*x^5 + x^3 - 12*x^2 + 18*x - 26", "y^7 + 3*y^4 - 3*y^2 + y"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.f);
    const BivarPoly f = parse_poly(c.f), g = parse_poly(c.g);
    CHECK(resultant(f, g, Var::second) == upoly(c.res_y));
    // Res_x is a polynomial in y; compare through the swapped variable.
    const UnivarPoly rx = resultant(f, g, Var::first);
    const UnivarPoly expect = parse_expression(c.res_x).specialize(Var::first, 0);
    CHECK(rx == expect);
  }
}

TEST_CASE("resultant agrees with a direct Sylvester determinant at sample points") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-4, 4), deg(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    auto rnd = [&] {
      BivarPoly p;
      const int d = deg(rng);
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) p += BivarPoly::monomial(coef(rng), i, j);
      p += BivarPoly::monomial(1, 0, d);  // keep y-degree positive
      return p;
    };
    const BivarPoly f = rnd(), g = rnd();
    if (f.degree_in(Var::second) == 0 || g.degree_in(Var::second) == 0) continue;
    const UnivarPoly r = resultant(f, g, Var::second);
    for (int x0 = -3; x0 <= 3; ++x0) {
      const UnivarPoly fx = f.specialize(Var::first, x0), gx = g.specialize(Var::first, x0);
      // Specialization keeps the formal degree only when leading y-coefficients survive.
      if (fx.degree() != f.degree_in(Var::second) || gx.degree() != g.degree_in(Var::second)) continue;
      CHECK(r(x0) == sylvester_det(fx, gx));
    }
  }
}

TEST_CASE("resultant preconditions") {
  CHECK_THROWS_AS(resultant(parse_poly("x^2 + 1"), parse_poly("y - x"), Var::second), DegenerateElimination);
}

TEST_CASE("integer determinant") {
  CHECK(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == 0);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{4, 3, 2}, {1, 5, 7}, {2, 2, 9}}) == 123);
}

TEST_CASE("gcd, exact division, squarefree part") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rnd = [&](int d) {
    BivarPoly p = BivarPoly::monomial(1, d, 0) + BivarPoly::monomial(1, 0, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; i + j < d; ++j) p += BivarPoly::monomial(coef(rng), i, j);
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const BivarPoly a = rnd(2), b = rnd(2), c = rnd(1);
    const BivarPoly g = gcd(a * c, b * c);
    CHECK(divide_exact(a * c, g) * g == a * c);
    CHECK(divide_exact(g, c.normalized()).is_constant() == (gcd(a, b).is_constant()));
  }
  CHECK(gcd(parse_poly("x^2 - y^2"), parse_poly("x*y + y^2")) == parse_poly("x + y"));
  CHECK(gcd(parse_poly("x^2 + 1"), parse_poly("y")) == BivarPoly::constant(1));
  CHECK_THROWS(divide_exact(parse_poly("x^2 + y"), parse_poly("x + 1")));
  CHECK(squarefree_part(parse_poly("(y - x)^2")).to_string() == "x - y");
  CHECK(squarefree_part(parse_poly("(x + y)^3 * (x - 1)^2 * y")) == parse_poly("(x + y)*(x - 1)*y").normalized());
  CHECK_THROWS_AS(squarefree_part(BivarPoly::constant(3)), DegreeZero);
  CHECK_THROWS_AS(squarefree_part(BivarPoly{}), ZeroPolynomial);
}

TEST_CASE("coprime basis") {
  const BivarPoly a = parse_poly("x - y"), b = parse_poly("x + y + 1"), c = parse_poly("x^2 + y^2 - 4");
  const std::vector<BivarPoly> basis = coprime_basis({a * b, b * c, pow(a, 2), BivarPoly::constant(5)});
  CHECK(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(gcd(basis[i], basis[j]).is_constant());
  BivarPoly prod = BivarPoly::constant(1);
  for (const BivarPoly& p : basis) prod *= p;
  CHECK(prod.normalized() == (a * b * c).normalized());
}
