#include "bsinf/parser.hpp"

#include <cctype>
#include <string>

#include "bsinf/errors.hpp"

namespace bsinf {

namespace {

constexpr unsigned long kMaxExponent = 4096;

struct Node {
  BivarPoly poly;
  std::vector<BivarPoly> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node n = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  Node expr() {
    Node acc = term();
    bool is_sum = false;
    while (peek('+') || peek('-')) {
      const char op = text_[pos_++];
      Node rhs = term();
      if (op == '+')
        acc.poly += rhs.poly;
      else
        acc.poly -= rhs.poly;
      is_sum = true;
    }
    if (is_sum) {
      acc.factors.clear();
      if (!acc.poly.is_constant()) acc.factors.push_back(acc.poly);
    }
    return acc;
  }

  Node term() {
    Node acc = unary();
    while (peek('*')) {
      ++pos_;
      Node rhs = unary();
      acc.poly *= rhs.poly;
      for (BivarPoly& f : rhs.factors) acc.factors.push_back(std::move(f));
    }
    return acc;
  }

  Node unary() {
    if (peek('-')) {
      ++pos_;
      Node n = unary();
      n.poly = -n.poly;
      return n;
    }
    return power();
  }

  Node power() {
    Node base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const unsigned long e = exponent();
    if (e == 0) return Node{BivarPoly::constant(1), {}};
    base.poly = pow(base.poly, static_cast<unsigned>(e));
    return base;
  }

  unsigned long exponent() {
    skip_ws();
    const std::size_t start = pos_;
    const Integer base = uint_literal("exponent");
    if (base > kMaxExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    if (!peek('^')) return base.get_ui();
    ++pos_;
    const unsigned long up = exponent();
    const Integer value = pow(base, up);
    if (value > kMaxExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    return value.get_ui();
  }

  Integer uint_literal(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) fail(std::string("unexpected end of input, expected ") + what);
      fail(std::string("expected ") + what);
    }
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Node primary() {
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      // "xy" or "x2" would be implicit multiplication.
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("implicit multiplication is not allowed");
      BivarPoly v = c == 'x' ? BivarPoly::x() : BivarPoly::y();
      return Node{v, {v}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = uint_literal("integer");
      Integer den = 1;
      if (peek('/')) {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        den = uint_literal("denominator");
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      }
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        fail("implicit multiplication is not allowed");
      return Node{BivarPoly::constant(make_rational(num, den)), {}};
    }
    if (c == '(') {
      ++pos_;
      Node inner = expr();
      if (!peek(')')) {
        if (at_end()) fail("unexpected end of input, expected ')'");
        fail("expected ')'");
      }
      ++pos_;
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedCurve parse_curve(std::string_view text) {
  Node n = Parser(text).parse();
  if (n.poly.is_zero()) throw ZeroPolynomial();
  if (n.poly.is_constant()) throw DegreeZero();
  ParsedCurve out{std::move(n.poly), {}};
  for (BivarPoly& f : n.factors)
    if (!f.is_constant()) out.factors.push_back(std::move(f));
  if (out.factors.empty()) out.factors.push_back(out.poly);
  return out;
}

BivarPoly parse_poly(std::string_view text) { return parse_curve(text).poly; }

BivarPoly parse_expression(std::string_view text) { return Parser(text).parse().poly; }

}  // namespace bsinf
