#pragma once

#include <string_view>
#include <vector>

#include "bsinf/bivar_poly.hpp"

namespace bsinf {

/// A parsed curve: the expanded polynomial and, when the expression is a
/// product at top level, its nonconstant multiplicative factors (exponents and
/// signs dropped, since they do not change the zero set).
struct ParsedCurve {
  BivarPoly poly;
  std::vector<BivarPoly> factors;
};

/// Grammar (whitespace between tokens is ignored):
///   expr     := term (('+'|'-') term)*
///   term     := unary ('*' unary)*
///   unary    := '-' unary | power
///   power    := primary ('^' exponent)?
///   exponent := uint ('^' exponent)?        right-associative
///   primary  := 'x' | 'y' | rational | '(' expr ')'
///   rational := uint ('/' uint)?
/// so "-x^2" is -(x^2). Implicit multiplication ("2x") is rejected.
///
/// Throws SyntaxError (with the byte offset), ZeroPolynomial or DegreeZero.
ParsedCurve parse_curve(std::string_view text);

BivarPoly parse_poly(std::string_view text);

/// Like parse_poly but accepts constants (including zero).
BivarPoly parse_expression(std::string_view text);

}  // namespace bsinf
