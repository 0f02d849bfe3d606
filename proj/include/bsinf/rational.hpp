#pragma once

// Exact scalars. GMP's mpq_class keeps values in lowest terms with a positive
// denominator as long as every value is produced by arithmetic or by
// make_rational(); raw string construction must be canonicalized.
//
// Never bind a gmpxx expression to `auto`: it captures an expression template
// that refers to temporaries.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bsinf {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

Integer floor_of(const Rational& v);
Integer ceil_of(const Rational& v);

/// 2^e for any integer e, as an exact rational.
Rational pow2(long e);

Rational pow(const Rational& base, unsigned long exp);
Integer pow(const Integer& base, unsigned long exp);

double to_double(const Rational& v);

}  // namespace bsinf
