#include "bsinf/projective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bsinf/errors.hpp"
#include "bsinf/roots.hpp"

namespace bsinf {

DirectionS1::DirectionS1(Integer u, Integer v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_ == 0 && v_ == 0) throw std::invalid_argument("direction (0, 0)");
  Integer g;
  mpz_gcd(g.get_mpz_t(), u_.get_mpz_t(), v_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(u_.get_mpz_t(), u_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(v_.get_mpz_t(), v_.get_mpz_t(), g.get_mpz_t());
  }
}

std::pair<double, double> DirectionS1::unit() const {
  const double a = u_.get_d();
  const double b = v_.get_d();
  const double n = std::hypot(a, b);
  return {a / n, b / n};
}

std::string DirectionS1::to_string() const { return "(" + u_.get_str() + ", " + v_.get_str() + ")"; }

ProjPointAtInfinity::ProjPointAtInfinity(Integer alpha, Integer beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ == 0 && beta_ == 0) throw std::invalid_argument("projective point [0:0]");
  Integer g;
  mpz_gcd(g.get_mpz_t(), alpha_.get_mpz_t(), beta_.get_mpz_t());
  if (alpha_ < 0 || (alpha_ == 0 && beta_ < 0)) g = -g;
  mpz_divexact(alpha_.get_mpz_t(), alpha_.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(beta_.get_mpz_t(), beta_.get_mpz_t(), g.get_mpz_t());
}

std::string ProjPointAtInfinity::to_string() const { return "[" + alpha_.get_str() + ":" + beta_.get_str() + "]"; }

GermChart GermChart::from_germ(BivarPoly germ) {
  return GermChart{std::move(germ),
                   ProjPointAtInfinity(1, 0),
                   {{{Integer(1), Integer(0), Integer(0)}, {Integer(0), Integer(1), Integer(0)}}},
                   DirectionS1(1, 0)};
}

BivarPoly leading_form(const BivarPoly& f) {
  if (f.is_constant()) throw DegreeZero();
  return f.homogeneous_part(f.degree());
}

std::vector<ProjPointAtInfinity> points_at_infinity(const BivarPoly& f) {
  const BivarPoly top = leading_form(f);
  const int d = top.degree();
  std::vector<ProjPointAtInfinity> out;
  if (top.coeff(d, 0) == 0) out.emplace_back(1, 0);
  // Remaining roots have beta != 0: [t : 1] with top(t, 1) = 0.
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, v] : top.terms()) c[static_cast<std::size_t>(m.i)] = v;
  const UnivarPoly p(std::move(c));
  if (p.degree() > 0) {
    for (const RootInterval& r : isolate_real_roots(p)) {
      if (!r.exact_point)
        throw UnsupportedCurve("point at infinity with irrational slope near [" + std::to_string(to_double(r.low)) +
                               ":1]; only rational points at infinity are supported");
      out.emplace_back(r.exact_point->get_num(), r.exact_point->get_den());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<DirectionS1, DirectionS1> direction_pair(const ProjPointAtInfinity& c) {
  DirectionS1 plus(c.alpha(), c.beta());
  return {plus, -plus};
}

GermChart chart_germ(const BivarPoly& f, const ProjPointAtInfinity& c) {
  const BivarPoly top = leading_form(f);
  if (top(Rational(c.alpha()), Rational(c.beta())) != 0)
    throw PointNotOnCurve(c.to_string() + " is not a root of the leading form " + top.to_string());

  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.alpha().get_mpz_t(), c.beta().get_mpz_t());
  // X = alpha U - t V, Y = beta U + s V inverts (U, V) = (s X + t Y, -beta X + alpha Y).
  const BivarPoly U = BivarPoly::x();
  const BivarPoly V = BivarPoly::y();
  const BivarPoly X = Rational(c.alpha()) * U - Rational(t) * V;
  const BivarPoly Y = Rational(c.beta()) * U + Rational(s) * V;
  const BivarPoly moved = substitute(f, X, Y);

  // Homogenize with Z and set U = 1: U^i V^j -> w^j z^(d - i - j).
  const int d = moved.degree();
  BivarPoly::Terms germ_terms;
  for (const auto& [m, coef] : moved.terms()) germ_terms.emplace(Monomial{m.j, d - m.i - m.j}, coef);
  BivarPoly germ = BivarPoly(std::move(germ_terms)).normalized();

  return GermChart{std::move(germ),
                   c,
                   {{{s, t, Integer(0)}, {Integer(-c.beta()), c.alpha(), Integer(0)}}},
                   direction_pair(c).first};
}

}  // namespace bsinf
