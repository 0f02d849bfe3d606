#include "bsinf/univar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsinf {

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UnivarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivarPoly UnivarPoly::constant(const Rational& c) { return UnivarPoly(std::vector<Rational>{c}); }

UnivarPoly UnivarPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UnivarPoly(std::move(v));
}

UnivarPoly UnivarPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const Integer& c : coeffs) v.emplace_back(c);
  return UnivarPoly(std::move(v));
}

Rational UnivarPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UnivarPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UnivarPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int UnivarPoly::sign_at(const Rational& t) const { return sgn((*this)(t)); }

double UnivarPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UnivarPoly UnivarPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UnivarPoly(std::move(d));
}

UnivarPoly UnivarPoly::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> v(coeffs_);
  for (Rational& c : v) c /= lc;
  return UnivarPoly(std::move(v));
}

UnivarPoly UnivarPoly::reflect() const {
  std::vector<Rational> v(coeffs_);
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return UnivarPoly(std::move(v));
}

std::vector<Integer> UnivarPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const Rational& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(v);
  }
  intpoly::make_primitive(out);
  return out;
}

UnivarPoly UnivarPoly::squarefree() const {
  if (is_constant()) return *this;
  const UnivarPoly g = gcd(*this, derivative());
  return divide_exact(*this, g);
}

std::string UnivarPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << bsinf::to_string(mag);
      continue;
    }
    if (!unit) os << bsinf::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UnivarPoly(std::move(v));
}

UnivarPoly operator-(const UnivarPoly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (Rational& c : v) c = -c;
  return UnivarPoly(std::move(v));
}

UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) { return a + (-b); }

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivarPoly(std::move(v));
}

UnivarPoly operator*(const Rational& c, const UnivarPoly& a) {
  if (c == 0) return {};
  std::vector<Rational> v(a.coeffs_);
  for (Rational& x : v) x *= c;
  return UnivarPoly(std::move(v));
}

UnivarPoly pow(const UnivarPoly& p, unsigned exp) {
  UnivarPoly result = UnivarPoly::constant(1);
  UnivarPoly base = p;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp > 0) base *= base;
  }
  return result;
}

std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UnivarPoly{}, a};
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lb = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UnivarPoly(std::move(q)), UnivarPoly(std::move(r))};
}

UnivarPoly divide_exact(const UnivarPoly& a, const UnivarPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact univariate division");
  return q;
}

UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  intpoly::Coeffs x = a.primitive_integer();
  intpoly::Coeffs y = b.primitive_integer();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    intpoly::Coeffs r = intpoly::pseudo_remainder(x, y);
    intpoly::make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return UnivarPoly::from_integers(x).monic();
}

namespace intpoly {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const Coeffs& p) {
  Integer g = 0;
  for (const Integer& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Coeffs& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (Integer& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Coeffs derivative(const Coeffs& p) {
  if (p.size() <= 1) return {};
  Coeffs d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  return d;
}

Coeffs pseudo_remainder(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw std::domain_error("pseudo-remainder by zero");
  Coeffs r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  if (r.size() < b.size()) return r;
  const std::size_t delta = r.size() - b.size() + 1;
  std::size_t steps = 0;
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t dr = r.size() - 1;
    const Integer lr = r.back();
    for (Integer& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[dr - db + j] -= lr * b[j];
    r.pop_back();
    trim(r);
    ++steps;
  }
  // Missing steps (coefficients that vanished early) still owe a factor lb each.
  if (steps < delta) {
    const Integer f = pow(lb, static_cast<unsigned long>(delta - steps));
    for (Integer& c : r) c *= f;
  }
  return r;
}

int sign_at(const Coeffs& p, const Rational& t) {
  // sign of sum a_i P^i Q^(n-i), with t = P/Q and Q > 0.
  if (p.empty()) return 0;
  const Integer& num = t.get_num();
  const Integer& den = t.get_den();
  Integer acc = p.back();
  Integer qpow = 1;
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
    qpow *= den;
    acc = acc * num + *it * qpow;
  }
  // acc = Q^n * p(t)
  return sgn(acc);
}

}  // namespace intpoly

}  // namespace bsinf
