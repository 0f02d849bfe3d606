#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bsinf/rational.hpp"
#include "bsinf/univar_poly.hpp"

namespace bsinf {

/// Isolates exactly one real root of a squarefree polynomial in [low, high].
/// Unless exact_point is set, low < high and neither endpoint is a root.
struct RootInterval {
  Rational low;
  Rational high;
  std::optional<Rational> exact_point;

  bool contains(const Rational& t) const { return low <= t && t <= high; }
  Rational width() const { return high - low; }
};

struct IsolationOptions {
  /// Recognize rational roots and report them as exact points. Costs a
  /// refinement per root; callers that only need brackets can switch it off.
  bool detect_rational = true;
};

/// One interval per distinct real root, sorted ascending, pairwise disjoint.
/// Uses Descartes' rule of signs with dyadic bisection on the squarefree part.
std::vector<RootInterval> isolate_real_roots(const UnivarPoly& p, IsolationOptions opts = {});

/// Bisects until high - low <= width (no-op for exact points). `p` must be the
/// polynomial the interval was isolated for (or any polynomial with the same
/// simple root in it and no other).
void refine(RootInterval& root, const UnivarPoly& p, const Rational& width);

/// Strictly positive lower bound on |r| for a root r != 0 in the interval;
/// refines the interval if it touches zero.
Rational distance_from_zero(RootInterval& root, const UnivarPoly& p);

/// Number of distinct real roots in (low, high]. Sturm sequence count.
std::size_t count_roots_in(const UnivarPoly& p, const Rational& low, const Rational& high);

/// Distinct real roots in (0, +inf) and in (-inf, 0).
std::size_t count_positive_roots(const UnivarPoly& p);
std::size_t count_negative_roots(const UnivarPoly& p);
std::size_t count_real_roots(const UnivarPoly& p);

/// Upper bound 2^k on the absolute value of every complex root (p nonzero).
long root_bound_log2(const UnivarPoly& p);

/// Signed remainder sequence of the squarefree part of p, with positive
/// rescaling to primitive integer coefficients.
class SturmSequence {
 public:
  explicit SturmSequence(const UnivarPoly& p);
  std::size_t variations_at(const Rational& t) const;
  std::size_t variations_at_pos_inf() const;
  std::size_t variations_at_neg_inf() const;
  std::size_t size() const { return seq_.size(); }

 private:
  std::vector<intpoly::Coeffs> seq_;
};

}  // namespace bsinf
