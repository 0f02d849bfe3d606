#pragma once

#include <cstddef>

#include "bsinf/bivar_poly.hpp"
#include "bsinf/errors.hpp"
#include "bsinf/projective.hpp"
#include "bsinf/rational.hpp"
#include "bsinf/univar_poly.hpp"

namespace bsinf {

/// Half-branches of a germ at the origin, split by the sign of z, counted on
/// the circle of radius epsilon_used.
struct SignedBranchCount {
  std::size_t plus = 0;
  std::size_t minus = 0;
  Rational epsilon_used;
  bool certified = true;

  std::size_t total() const { return plus + minus; }
};

/// Radius below which the circle picture of the germ is stable: every radius in
/// (0, bound] meets {g = 0} in the same number of transverse points, none on z = 0.
/// `certified` is false when the adaptive shrinking fallback produced the value.
struct CriticalRadius {
  Rational bound;
  bool certified = true;
};

class UncertifiedCount : public Error {
 public:
  explicit UncertifiedCount(SignedBranchCount count)
      : Error("branch count obtained without a certified radius"), count_(std::move(count)) {}
  const SignedBranchCount& count() const noexcept { return count_; }

 private:
  SignedBranchCount count_;
};

/// Real points of {g = 0} on the circle w^2 + z^2 = eps^2, by sign of z.
struct CircleSolutions {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t on_axis = 0;  // z == 0

  std::size_t total() const { return positive + negative + on_axis; }
};

/// (1 + t^2)^d g(eps (1 - t^2)/(1 + t^2), 2 eps t/(1 + t^2)). Real roots t are in
/// bijection with the circle points other than (-eps, 0); sign(t) = sign(z).
UnivarPoly circle_restriction(const BivarPoly& g, const Rational& eps);

/// Throws NonTransverseCircle if the circle is a component of {g = 0}.
CircleSolutions circle_solutions(const BivarPoly& g, const Rational& eps);

std::size_t count_circle_solutions(const BivarPoly& g, const Rational& eps);

/// Bound from the distance-function critical points, the nonzero roots of
/// g(w, 0), and 1 (inclusive cap). Dyadic. Precondition: germ vanishes at the
/// origin and is not divisible by z.
CriticalRadius critical_radius_bound(const GermChart& chart);

/// Counts at the certified radius. Throws UncertifiedCount (carrying the counts)
/// if only the fallback radius was available.
SignedBranchCount count_half_branches(const GermChart& chart);

/// Counts at a caller-chosen radius; never certified.
SignedBranchCount count_half_branches_at(const GermChart& chart, const Rational& eps);

}  // namespace bsinf
