#pragma once

#include <map>
#include <string>
#include <vector>

#include "bsinf/rational.hpp"
#include "bsinf/univar_poly.hpp"

namespace bsinf {

enum class Var { first, second };

/// Exponent pair of x^i y^j (the germ module reads the variables as w, z).
struct Monomial {
  int i = 0;
  int j = 0;
  int degree() const noexcept { return i + j; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Descending graded-lex: higher total degree first, then higher exponent of
/// the first variable.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.i > b.i;
  }
};

/// Sparse bivariate polynomial over Q. No stored zero coefficients; iteration
/// runs from the leading graded-lex term down to the constant term.
class BivarPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  BivarPoly() = default;
  explicit BivarPoly(Terms terms);

  static BivarPoly constant(const Rational& c);
  static BivarPoly monomial(const Rational& c, int i, int j);
  static BivarPoly x() { return monomial(1, 1, 0); }
  static BivarPoly y() { return monomial(1, 0, 1); }
  /// Embeds a univariate polynomial as a polynomial in the chosen variable.
  static BivarPoly from_univariate(const UnivarPoly& p, Var v);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  int degree_in(Var v) const noexcept;
  Rational coeff(int i, int j) const;
  /// Leading term in graded-lex order. Precondition: nonzero.
  const std::pair<const Monomial, Rational>& leading_term() const;

  Rational operator()(const Rational& x, const Rational& y) const;
  double eval(double x, double y) const;

  BivarPoly derivative(Var v) const;
  /// Homogeneous part of total degree d.
  BivarPoly homogeneous_part(int d) const;

  /// Coefficients of v^k as polynomials in the other variable, k = 0..deg_v.
  std::vector<UnivarPoly> as_univariate_in(Var v) const;
  static BivarPoly from_univariate_in(const std::vector<UnivarPoly>& coeffs, Var v);

  /// Restriction to the other variable fixed: f(t, y) for Var::first etc.
  UnivarPoly specialize(Var v, const Rational& value) const;

  /// Positive rational multiple with coprime integer coefficients and a positive
  /// leading graded-lex coefficient.
  BivarPoly normalized() const;

  std::string to_string(char first = 'x', char second = 'y') const;

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Rational& c, const BivarPoly& a);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  BivarPoly& operator+=(const BivarPoly& b);
  BivarPoly& operator-=(const BivarPoly& b);
  BivarPoly& operator*=(const BivarPoly& b) { return *this = *this * b; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

BivarPoly pow(const BivarPoly& p, unsigned exp);

/// f(px, py): substitutes polynomials for both variables.
BivarPoly substitute(const BivarPoly& f, const BivarPoly& px, const BivarPoly& py);

/// Integer affine map (x, y) -> (a x + b y + e, c x + d y + f).
struct AffineMap {
  Integer a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;
  Integer det() const { return a * d - b * c; }
};

/// f composed with the affine map.
BivarPoly compose(const BivarPoly& f, const AffineMap& m);

}  // namespace bsinf
