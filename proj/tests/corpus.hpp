#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bsinf/bivar_poly.hpp"
#include "bsinf/invariant.hpp"
#include "bsinf/parser.hpp"

namespace bsinf::testing {

/// Nondecreasing tuples with entries in [1, max_entry], length 1..max_len, even sum.
inline std::vector<KInvariant> even_tuples(std::size_t max_entry, std::size_t max_len) {
  std::vector<KInvariant> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (!cur.empty()) {
      std::size_t s = 0;
      for (std::size_t v : cur) s += v;
      if (s % 2 == 0) out.emplace_back(cur);
    }
    if (cur.size() == max_len) return;
    for (std::size_t v = lo; v <= max_entry; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

struct NamedCurve {
  std::string text;
  std::vector<BivarPoly> factors;
};

inline NamedCurve named(const std::string& text) { return {text, parse_curve(text).factors}; }

/// Curves with hand-checkable behaviour at infinity.
inline std::vector<NamedCurve> hand_curves() {
  return {named("y^2 - x^3"), named("y^2 - x^5"), named("x^2 - y^2 - y^3"), named("x^2 + y^2 - 1")};
}

/// Random integer matrix with determinant +-1, built from elementary operations.
inline AffineMap random_unimodular(std::mt19937_64& rng, int steps = 6) {
  std::uniform_int_distribution<int> coin(0, 3), mult(-2, 2), shift(-4, 4);
  Integer a = 1, b = 0, c = 0, d = 1;
  for (int s = 0; s < steps; ++s) {
    const int k = mult(rng);
    switch (coin(rng)) {
      case 0: a += k * c; b += k * d; break;  // row1 += k row2
      case 1: c += k * a; d += k * b; break;  // row2 += k row1
      case 2: std::swap(a, c); std::swap(b, d); break;
      default: a = -a; b = -b; break;
    }
  }
  AffineMap m;
  m.a = a;
  m.b = b;
  m.c = c;
  m.d = d;
  m.e = shift(rng);
  m.f = shift(rng);
  return m;
}

/// One random factor: a line, a parabola (y - a x)^2 +- r (y + a x), or a
/// positive definite quadratic.
inline BivarPoly random_factor(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2), small(-3, 3), pos(1, 3);
  const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
  switch (kind(rng)) {
    case 0: {
      int a = 0, b = 0;
      while (a == 0 && b == 0) {
        a = small(rng);
        b = small(rng);
      }
      return Rational(a) * y + Rational(b) * x + BivarPoly::constant(small(rng));
    }
    case 1: {
      const int a = small(rng);
      const int r = pos(rng) * (kind(rng) % 2 ? 1 : -1);
      const BivarPoly d = y - Rational(a) * x;
      return d * d + Rational(r) * (y + Rational(a) * x);
    }
    default: {
      const int p = small(rng), q = small(rng), s = pos(rng);
      const BivarPoly u = x - BivarPoly::constant(p), v = y - BivarPoly::constant(q);
      return u * u + u * v + v * v + BivarPoly::constant(s);
    }
  }
}

}  // namespace bsinf::testing
