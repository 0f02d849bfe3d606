#include "bsinf/germ.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "bsinf/algebra.hpp"
#include "bsinf/roots.hpp"

namespace bsinf {

namespace {

constexpr int kFallbackMaxSteps = 48;
constexpr int kFallbackStableRun = 3;

// w g_z - z g_w: vanishes where the circle through a point is tangent to the curve.
BivarPoly angular_derivative(const BivarPoly& g) {
  return BivarPoly::x() * g.derivative(Var::second) - BivarPoly::y() * g.derivative(Var::first);
}

// Projection of {g = 0, h = 0} to the axis of `keep` (the other variable is
// eliminated). Empty optional if the elimination degenerates.
std::optional<UnivarPoly> project(const BivarPoly& g, const BivarPoly& h, Var keep) {
  const Var gone = keep == Var::first ? Var::second : Var::first;
  auto as_poly_in_keep = [keep](const BivarPoly& p) {
    return p.specialize(keep == Var::first ? Var::second : Var::first, 0);
  };
  UnivarPoly r;
  if (g.degree_in(gone) == 0)
    r = as_poly_in_keep(g);
  else if (h.degree_in(gone) == 0)
    r = as_poly_in_keep(h);
  else
    r = resultant(g, h, gone);
  if (r.is_zero()) return std::nullopt;
  return r;
}

void push_nonzero_root_bounds(const UnivarPoly& p, std::vector<Rational>& out) {
  if (p.is_constant()) return;
  for (RootInterval& r : isolate_real_roots(p, IsolationOptions{.detect_rational = false})) {
    if (r.exact_point && *r.exact_point == 0) continue;
    out.push_back(distance_from_zero(r, p));
  }
}

CriticalRadius fallback_radius(const BivarPoly& g) {
  std::optional<std::size_t> last;
  int run = 0;
  Rational eps = 1;
  for (int k = 1; k <= kFallbackMaxSteps; ++k) {
    eps /= 4;
    CircleSolutions s;
    try {
      s = circle_solutions(g, eps);
    } catch (const NonTransverseCircle&) {
      run = 0;
      last.reset();
      continue;
    }
    if (s.on_axis > 0) {
      run = 0;
      last.reset();
      continue;
    }
    if (last && *last == s.total())
      ++run;
    else
      run = 1;
    last = s.total();
    if (run >= kFallbackStableRun) return CriticalRadius{eps, false};
  }
  throw Error("adaptive radius search did not stabilize");
}

}  // namespace

UnivarPoly circle_restriction(const BivarPoly& g, const Rational& eps) {
  const int d = g.degree();
  if (d < 0) return {};
  const UnivarPoly a(std::vector<Rational>{1, 0, -1});  // 1 - t^2
  const UnivarPoly b(std::vector<Rational>{0, 2});      // 2t
  const UnivarPoly c(std::vector<Rational>{1, 0, 1});   // 1 + t^2
  std::vector<UnivarPoly> ap{UnivarPoly::constant(1)}, bp{UnivarPoly::constant(1)}, cp{UnivarPoly::constant(1)};
  std::vector<Rational> ep{Rational(1)};
  for (int k = 1; k <= d; ++k) {
    ap.push_back(ap.back() * a);
    bp.push_back(bp.back() * b);
    cp.push_back(cp.back() * c);
    ep.push_back(ep.back() * eps);
  }
  UnivarPoly out;
  for (const auto& [m, coef] : g.terms()) {
    const auto i = static_cast<std::size_t>(m.i);
    const auto j = static_cast<std::size_t>(m.j);
    const auto rest = static_cast<std::size_t>(d - m.i - m.j);
    out += (coef * ep[i + j]) * (ap[i] * bp[j] * cp[rest]);
  }
  return out;
}

CircleSolutions circle_solutions(const BivarPoly& g, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("circle radius must be positive");
  const UnivarPoly p = circle_restriction(g, eps);
  if (p.is_zero()) throw NonTransverseCircle("the circle of radius " + to_string(eps) + " is a component of the curve");
  CircleSolutions s;
  s.positive = count_positive_roots(p);
  s.negative = count_negative_roots(p);
  s.on_axis = (p(0) == 0 ? 1 : 0) + (g(-eps, 0) == 0 ? 1 : 0);
  return s;
}

std::size_t count_circle_solutions(const BivarPoly& g, const Rational& eps) { return circle_solutions(g, eps).total(); }

CriticalRadius critical_radius_bound(const GermChart& chart) {
  const BivarPoly& g = chart.germ;
  if (g.is_constant()) throw std::invalid_argument("germ must be nonconstant");
  if (g(0, 0) != 0) throw std::invalid_argument("germ must vanish at the origin");
  const UnivarPoly on_axis = g.specialize(Var::second, 0);
  if (on_axis.is_zero()) throw std::invalid_argument("germ must not be divisible by z");

  std::vector<Rational> bounds;

  // Components along which w^2 + z^2 is constant (circles about the origin, or
  // w^2 + z^2 itself) make the critical system degenerate. They meet z = 0 at
  // +-radius, so the axis roots below already keep the circle count off them.
  const BivarPoly h = angular_derivative(g);
  const BivarPoly radial = h.is_zero() ? g : gcd(g, h);
  const BivarPoly rest = divide_exact(g, radial);
  if (!rest.is_constant()) {
    const BivarPoly hr = angular_derivative(rest);
    if (!hr.is_zero()) {
      // A nonzero critical point (w, z) has w != 0 or z != 0, so its distance to
      // the origin is at least the smallest nonzero |root| of one projection.
      for (Var keep : {Var::first, Var::second}) {
        const std::optional<UnivarPoly> proj = project(rest, hr, keep);
        if (!proj) return fallback_radius(g);
        push_nonzero_root_bounds(*proj, bounds);
      }
    }
  }
  push_nonzero_root_bounds(on_axis, bounds);

  Rational eps = 1;
  for (const Rational& b : bounds)
    while (eps >= b) eps /= 2;
  return CriticalRadius{eps, true};
}

SignedBranchCount count_half_branches(const GermChart& chart) {
  const CriticalRadius r = critical_radius_bound(chart);
  const CircleSolutions s = circle_solutions(chart.germ, r.bound);
  if (s.on_axis != 0) throw std::logic_error("certified radius produced a solution on z = 0");
  SignedBranchCount count{s.positive, s.negative, r.bound, r.certified};
  if (!r.certified) throw UncertifiedCount(count);
  return count;
}

SignedBranchCount count_half_branches_at(const GermChart& chart, const Rational& eps) {
  const CircleSolutions s = circle_solutions(chart.germ, eps);
  return SignedBranchCount{s.positive, s.negative, eps, false};
}

}  // namespace bsinf
