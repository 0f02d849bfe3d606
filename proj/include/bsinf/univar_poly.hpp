#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsinf/rational.hpp"

namespace bsinf {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  explicit UnivarPoly(std::vector<Rational> coeffs);

  static UnivarPoly constant(const Rational& c);
  static UnivarPoly monomial(const Rational& c, int degree);
  static UnivarPoly variable() { return monomial(1, 1); }
  static UnivarPoly from_integers(const std::vector<Integer>& coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const;
  double eval(double t) const;

  UnivarPoly derivative() const;
  UnivarPoly monic() const;
  /// p(t) -> p(-t)
  UnivarPoly reflect() const;

  /// Positive rational multiple with coprime integer coefficients and positive
  /// leading coefficient. Same roots, same sign pattern up to a positive factor.
  std::vector<Integer> primitive_integer() const;

  UnivarPoly squarefree() const;

  std::string to_string(char var = 'x') const;

  friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b);
  friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b);
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  friend UnivarPoly operator*(const Rational& c, const UnivarPoly& a);
  friend UnivarPoly operator-(const UnivarPoly& a);
  friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.coeffs_ == b.coeffs_; }

  UnivarPoly& operator+=(const UnivarPoly& b) { return *this = *this + b; }
  UnivarPoly& operator-=(const UnivarPoly& b) { return *this = *this - b; }
  UnivarPoly& operator*=(const UnivarPoly& b) { return *this = *this * b; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UnivarPoly pow(const UnivarPoly& p, unsigned exp);

/// Euclidean division over Q: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b);

/// Exact quotient; throws std::logic_error when b does not divide a.
UnivarPoly divide_exact(const UnivarPoly& a, const UnivarPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b);

// Integer coefficient-vector helpers shared by the root isolation code.
namespace intpoly {

using Coeffs = std::vector<Integer>;

void trim(Coeffs& p);
Integer content(const Coeffs& p);
/// Divides out the content; leading coefficient made positive.
void make_primitive(Coeffs& p);
Coeffs derivative(const Coeffs& p);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Coeffs pseudo_remainder(const Coeffs& a, const Coeffs& b);
int sign_at(const Coeffs& p, const Rational& t);

}  // namespace intpoly

}  // namespace bsinf
