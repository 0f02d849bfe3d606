#pragma once

#include <vector>

#include "bsinf/bivar_poly.hpp"
#include "bsinf/univar_poly.hpp"

namespace bsinf {

/// Greatest common divisor over Q, normalized (see BivarPoly::normalized).
/// Returns the constant 1 for coprime inputs.
BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);

/// a / b, throwing std::logic_error when the division is not exact.
BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b);

/// Same real zero set, pairwise distinct irreducible factors, normalized.
/// Precondition: f nonzero and nonconstant (throws ZeroPolynomial / DegreeZero).
BivarPoly squarefree_part(const BivarPoly& f);

/// Sylvester resultant eliminating `v`; the result is a polynomial in the other
/// variable. Throws DegenerateElimination if either input has degree 0 in v.
UnivarPoly resultant(const BivarPoly& f, const BivarPoly& g, Var v);

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
Integer determinant(std::vector<std::vector<Integer>> m);

/// Pairwise coprime squarefree polynomials whose product has the same zero set
/// as the product of the inputs. Constant inputs are dropped.
std::vector<BivarPoly> coprime_basis(const std::vector<BivarPoly>& factors);

}  // namespace bsinf
