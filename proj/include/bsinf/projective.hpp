#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "bsinf/bivar_poly.hpp"
#include "bsinf/rational.hpp"

namespace bsinf {

/// Primitive integer pair (u, v), gcd(|u|, |v|) = 1. A direction in S^1.
class DirectionS1 {
 public:
  /// Divides out the gcd; throws std::invalid_argument on (0, 0).
  DirectionS1(Integer u, Integer v);

  const Integer& u() const noexcept { return u_; }
  const Integer& v() const noexcept { return v_; }
  DirectionS1 operator-() const { return DirectionS1(-u_, -v_); }
  bool antipodal_to(const DirectionS1& o) const { return u_ == -o.u_ && v_ == -o.v_; }
  /// (u, v) / |(u, v)|, for display and numeric comparison only.
  std::pair<double, double> unit() const;
  std::string to_string() const;

  friend bool operator==(const DirectionS1&, const DirectionS1&) = default;
  friend auto operator<=>(const DirectionS1& a, const DirectionS1& b) {
    if (auto c = cmp(a.u_, b.u_); c != 0) return c <=> 0;
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  Integer u_, v_;
};

/// A real point [alpha : beta] on the line at infinity, normalized so that
/// gcd = 1 and alpha > 0, or alpha = 0 and beta = 1.
class ProjPointAtInfinity {
 public:
  ProjPointAtInfinity(Integer alpha, Integer beta);

  const Integer& alpha() const noexcept { return alpha_; }
  const Integer& beta() const noexcept { return beta_; }
  std::string to_string() const;

  friend bool operator==(const ProjPointAtInfinity&, const ProjPointAtInfinity&) = default;
  friend auto operator<=>(const ProjPointAtInfinity& a, const ProjPointAtInfinity& b) {
    if (auto c = cmp(a.alpha_, b.alpha_); c != 0) return c <=> 0;
    return cmp(a.beta_, b.beta_) <=> 0;
  }

 private:
  Integer alpha_, beta_;
};

/// Local picture of a curve at one of its points at infinity.
///
/// The germ lives in coordinates (w, z): with the unimodular rows
/// (s, t) and (-beta, alpha), U = s X + t Y and V = -beta X + alpha Y, the
/// germ is F(1, w, z) where F(U, V, Z) is the homogenized curve. So w = V/U and
/// z = Z/U; the side z -> 0+ is the direction +a = (alpha, beta).
struct GermChart {
  BivarPoly germ;  // first variable w, second z
  ProjPointAtInfinity source_point;
  /// Rows [s t 0; -beta alpha 0] acting on (X, Y, Z).
  std::array<std::array<Integer, 3>, 2> chart_map;
  DirectionS1 plus_direction;

  /// Wraps a germ given directly in (w, z) coordinates, for germ-level tests
  /// and callers that build their own charts. Source point is recorded as [1:0].
  static GermChart from_germ(BivarPoly germ);
};

/// Homogeneous part of top degree.
BivarPoly leading_form(const BivarPoly& f);

/// Real projective roots of the leading form, sorted by (alpha, beta).
/// Throws UnsupportedCurve if a real root has an irrational slope.
std::vector<ProjPointAtInfinity> points_at_infinity(const BivarPoly& f);

/// (+a, -a) where +a carries the point's representative.
std::pair<DirectionS1, DirectionS1> direction_pair(const ProjPointAtInfinity& c);

/// Chart at c (see GermChart). Throws PointNotOnCurve if the leading form does
/// not vanish at c. The germ is normalized and squarefree when f is.
GermChart chart_germ(const BivarPoly& f, const ProjPointAtInfinity& c);

}  // namespace bsinf
