#include "bsinf/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsinf {

BivarPoly::BivarPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BivarPoly BivarPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const Rational& c, int i, int j) {
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Monomial{i, j}, c);
  return p;
}

BivarPoly BivarPoly::from_univariate(const UnivarPoly& p, Var v) {
  BivarPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    out.terms_.emplace(v == Var::first ? Monomial{k, 0} : Monomial{0, k}, c);
  }
  return out;
}

bool BivarPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int BivarPoly::degree() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int BivarPoly::degree_in(Var v) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::first ? m.i : m.j);
  return d;
}

Rational BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& BivarPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return *terms_.begin();
}

Rational BivarPoly::operator()(const Rational& x, const Rational& y) const {
  // Horner in y over Horner in x, via the recursive representation.
  Rational acc = 0;
  const std::vector<UnivarPoly> rows = as_univariate_in(Var::second);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * y + (*it)(x);
  return acc;
}

double BivarPoly::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (int k = 0; k < m.i; ++k) t *= x;
    for (int k = 0; k < m.j; ++k) t *= y;
    acc += t;
  }
  return acc;
}

BivarPoly BivarPoly::derivative(Var v) const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) {
    const int e = v == Var::first ? m.i : m.j;
    if (e == 0) continue;
    const Monomial dm = v == Var::first ? Monomial{m.i - 1, m.j} : Monomial{m.i, m.j - 1};
    out.terms_.emplace(dm, c * e);
  }
  return out;
}

BivarPoly BivarPoly::homogeneous_part(int d) const {
  BivarPoly out;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

std::vector<UnivarPoly> BivarPoly::as_univariate_in(Var v) const {
  const int dv = degree_in(v);
  if (dv < 0) return {};
  const int other_deg = degree_in(v == Var::first ? Var::second : Var::first);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dv) + 1,
                                          std::vector<Rational>(static_cast<std::size_t>(other_deg) + 1));
  for (const auto& [m, c] : terms_) {
    const int k = v == Var::first ? m.i : m.j;
    const int o = v == Var::first ? m.j : m.i;
    rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(o)] = c;
  }
  std::vector<UnivarPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

BivarPoly BivarPoly::from_univariate_in(const std::vector<UnivarPoly>& coeffs, Var v) {
  BivarPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const UnivarPoly& p = coeffs[k];
    for (int o = 0; o <= p.degree(); ++o) {
      const Rational& c = p.coeffs()[static_cast<std::size_t>(o)];
      if (c == 0) continue;
      const int ki = static_cast<int>(k);
      out.terms_.emplace(v == Var::first ? Monomial{ki, o} : Monomial{o, ki}, c);
    }
  }
  return out;
}

UnivarPoly BivarPoly::specialize(Var v, const Rational& value) const {
  // Fixing `v` leaves a polynomial in the other variable.
  const Var other = v == Var::first ? Var::second : Var::first;
  const std::vector<UnivarPoly> rows = as_univariate_in(other);
  std::vector<Rational> out;
  out.reserve(rows.size());
  for (const UnivarPoly& r : rows) out.push_back(r(value));
  return UnivarPoly(std::move(out));
}

BivarPoly BivarPoly::normalized() const {
  if (terms_.empty()) return {};
  Integer l = 1;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale = make_rational(l, g);
  if (terms_.begin()->second < 0) scale = -scale;
  return scale * *this;
}

std::string BivarPoly::to_string(char first, char second) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [m, c] : terms_) {
    const Rational mag = abs(c);
    if (lead)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    lead = false;
    if (m.degree() == 0) {
      os << bsinf::to_string(mag);
      continue;
    }
    std::string mono;
    auto factor = [&mono](char var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    factor(first, m.i);
    factor(second, m.j);
    if (mag != 1) os << bsinf::to_string(mag) << "*";
    os << mono;
  }
  return os.str();
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  r += b;
  return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  r -= b;
  return r;
}

BivarPoly operator-(const BivarPoly& a) {
  BivarPoly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{ma.i + mb.i, ma.j + mb.j}, ca * cb);
  return r;
}

BivarPoly operator*(const Rational& c, const BivarPoly& a) {
  if (c == 0) return {};
  BivarPoly r = a;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

BivarPoly pow(const BivarPoly& p, unsigned exp) {
  BivarPoly result = BivarPoly::constant(1);
  BivarPoly base = p;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp > 0) base *= base;
  }
  return result;
}

BivarPoly substitute(const BivarPoly& f, const BivarPoly& px, const BivarPoly& py) {
  if (f.is_zero()) return {};
  const int dx = f.degree_in(Var::first);
  const int dy = f.degree_in(Var::second);
  std::vector<BivarPoly> xp{BivarPoly::constant(1)};
  std::vector<BivarPoly> yp{BivarPoly::constant(1)};
  for (int k = 1; k <= dx; ++k) xp.push_back(xp.back() * px);
  for (int k = 1; k <= dy; ++k) yp.push_back(yp.back() * py);
  BivarPoly out;
  for (const auto& [m, c] : f.terms())
    out += c * (xp[static_cast<std::size_t>(m.i)] * yp[static_cast<std::size_t>(m.j)]);
  return out;
}

BivarPoly compose(const BivarPoly& f, const AffineMap& m) {
  const BivarPoly px = Rational(m.a) * BivarPoly::x() + Rational(m.b) * BivarPoly::y() + BivarPoly::constant(Rational(m.e));
  const BivarPoly py = Rational(m.c) * BivarPoly::x() + Rational(m.d) * BivarPoly::y() + BivarPoly::constant(Rational(m.f));
  return substitute(f, px, py);
}

}  // namespace bsinf
