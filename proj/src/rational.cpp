#include "bsinf/rational.hpp"

#include <stdexcept>

namespace bsinf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw std::invalid_argument("malformed rational: " + std::string(text));
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

Integer floor_of(const Rational& v) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& v) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

Rational pow2(long e) {
  Integer p;
  const unsigned long mag = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, mag);
  return e < 0 ? make_rational(1, p) : Rational(p);
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, unsigned long exp) {
  Integer n = pow(Integer(base.get_num()), exp);
  Integer d = pow(Integer(base.get_den()), exp);
  Rational r;
  r.get_num() = n;
  r.get_den() = d;
  return r;
}

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace bsinf
