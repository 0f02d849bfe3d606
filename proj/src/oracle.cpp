#include "bsinf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bsinf/algebra.hpp"
#include "bsinf/simd/poly_eval.hpp"

namespace bsinf {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kAngularWidth = 1e-12;
constexpr std::size_t kProbeSubsamples = 64;
constexpr std::size_t kMaxHistory = 10;

struct Grid {
  std::vector<double> theta, c, s;
  explicit Grid(std::size_t n) : theta(n), c(n), s(n) {
    for (std::size_t k = 0; k < n; ++k) {
      theta[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
      c[k] = std::cos(theta[k]);
      s[k] = std::sin(theta[k]);
    }
  }
};

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

double on_circle(const simd::DensePoly& p, double t) { return simd::eval_point(p, std::cos(t), std::sin(t)); }

double bisect(const simd::DensePoly& p, double a, double b, double fa) {
  while (b - a > kAngularWidth) {
    const double m = 0.5 * (a + b);
    const double fm = on_circle(p, m);
    if (fm == 0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

void crossings_of(const simd::DensePoly& p, const Grid& g, const OracleConfig& cfg, std::vector<double>& out) {
  const std::size_t n = g.theta.size();
  std::vector<double> v(n);
  simd::eval_batch(p, g.c.data(), g.s.data(), v.data(), n);
  auto next_theta = [&](std::size_t k) { return k + 1 < n ? g.theta[k + 1] : kTwoPi; };

  for (std::size_t k = 0; k < n; ++k) {
    const double a = v[k];
    const double b = v[(k + 1) % n];
    if (a == 0) {
      out.push_back(g.theta[k]);
    } else if (b != 0 && (a < 0) != (b < 0)) {
      out.push_back(wrap(bisect(p, g.theta[k], next_theta(k), a)));
    }
  }

  // Two crossings inside one grid cell leave no sign change; look below small
  // local minima of |f| whose neighbours all share a sign.
  const double threshold = cfg.probe_threshold * p.max_abs();
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = v[(k + n - 1) % n], cur = v[k], next = v[(k + 1) % n];
    if (std::abs(cur) >= threshold || cur == 0) continue;
    if (std::abs(cur) > std::abs(prev) || std::abs(cur) > std::abs(next)) continue;
    if ((prev < 0) != (cur < 0) || (next < 0) != (cur < 0) || prev == 0 || next == 0) continue;
    const double lo = g.theta[k] - kTwoPi / static_cast<double>(n);
    const double step = 2 * kTwoPi / static_cast<double>(n) / static_cast<double>(kProbeSubsamples);
    double ta = lo, fa = on_circle(p, ta);
    for (std::size_t s = 1; s <= kProbeSubsamples; ++s) {
      const double tb = lo + step * static_cast<double>(s);
      const double fb = on_circle(p, tb);
      if (fb == 0) {
        out.push_back(wrap(tb));
      } else if (fa != 0 && (fa < 0) != (fb < 0)) {
        out.push_back(wrap(bisect(p, ta, tb, fa)));
      }
      ta = tb;
      fa = fb;
    }
  }
}

std::vector<double> crossings_at(const std::vector<BivarPoly>& basis, double radius, const Grid& grid,
                                 const OracleConfig& cfg) {
  std::vector<double> out;
  for (const BivarPoly& b : basis) crossings_of(simd::DensePoly::scaled(b, radius), grid, cfg, out);
  std::sort(out.begin(), out.end());
  return out;
}

double circular_distance(double a, double b) {
  const double d = std::abs(wrap(a - b));
  return std::min(d, kTwoPi - d);
}

// Cyclic shift s minimizing total distance between head[i] and next[(i + s) % n].
std::size_t best_shift(const std::vector<double>& head, const std::vector<double>& next) {
  const std::size_t n = head.size();
  std::size_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < n; ++s) {
    double cost = 0;
    for (std::size_t i = 0; i < n; ++i) cost += circular_distance(head[i], next[(i + s) % n]);
    if (cost < best_cost) {
      best_cost = cost;
      best = s;
    }
  }
  return best;
}

struct Cluster {
  double angle;
  std::size_t count;
};

// Extrapolated limit angles of the trajectories ending at radius index t.
std::vector<double> limits_at(const std::vector<std::vector<double>>& angles, std::size_t t) {
  const std::size_t n = angles[t].size();
  std::size_t len = 1;
  while (len < kMaxHistory && len <= t && angles[t - len].size() == n) ++len;

  std::vector<std::vector<double>> traj(n);
  std::vector<double> head = angles[t];
  for (std::size_t i = 0; i < n; ++i) traj[i].push_back(head[i]);
  for (std::size_t back = 1; back < len; ++back) {
    const std::vector<double>& prev = angles[t - back];
    const std::size_t s = best_shift(head, prev);
    for (std::size_t i = 0; i < n; ++i) {
      head[i] = prev[(i + s) % n];
      // Unwrap against the newest sample of this trajectory.
      double a = head[i];
      const double ref = traj[i].front();
      while (a - ref > std::numbers::pi) a -= kTwoPi;
      while (ref - a > std::numbers::pi) a += kTwoPi;
      traj[i].push_back(a);
    }
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::vector<double>& tr : traj) {
    std::reverse(tr.begin(), tr.end());
    out.push_back(wrap(wynn_limit(tr)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cluster> cluster(const std::vector<double>& sorted, double tol) {
  std::vector<std::vector<double>> groups;
  for (double a : sorted) {
    if (!groups.empty() && a - groups.back().back() <= tol)
      groups.back().push_back(a);
    else
      groups.push_back({a});
  }
  if (groups.size() > 1 && groups.front().front() + kTwoPi - groups.back().back() <= tol) {
    for (double a : groups.back()) groups.front().push_back(a - kTwoPi);
    groups.pop_back();
  }
  std::vector<Cluster> out;
  for (const auto& g : groups) {
    double sx = 0, sy = 0;
    for (double a : g) {
      sx += std::cos(a);
      sy += std::sin(a);
    }
    out.push_back(Cluster{wrap(std::atan2(sy, sx)), g.size()});
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return a.angle < b.angle; });
  return out;
}

bool same_clusters(const std::vector<Cluster>& a, const std::vector<Cluster>& b, double tol) {
  // Matched by distance, not index: a limit just below 0 sorts to the end.
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Cluster& ca : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size() && !found; ++i) {
      if (used[i] || b[i].count != ca.count || circular_distance(ca.angle, b[i].angle) > tol) continue;
      used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<BivarPoly> zero_set_basis(const std::vector<BivarPoly>& factors) {
  std::vector<BivarPoly> nonconstant;
  for (const BivarPoly& f : factors)
    if (!f.is_constant()) nonconstant.push_back(f);
  if (nonconstant.empty()) throw std::invalid_argument("oracle needs a nonconstant polynomial");
  return coprime_basis(nonconstant);
}

}  // namespace

void OracleConfig::validate() const {
  if (radius_exp_min < 0 || radius_exp_max < radius_exp_min) throw std::invalid_argument("bad radius schedule");
  if (radius_exp_max > 60) throw std::invalid_argument("radius exponent too large for double evaluation");
  if (angular_grid < 16) throw std::invalid_argument("angular grid too coarse");
  if (!(cluster_tol > 0)) throw std::invalid_argument("cluster tolerance must be positive");
  if (stability_window < 2) throw std::invalid_argument("stability window must be at least 2");
  if (!(probe_threshold > 0)) throw std::invalid_argument("probe threshold must be positive");
  if (static_cast<std::size_t>(radius_exp_max - radius_exp_min + 1) < stability_window)
    throw std::invalid_argument("radius schedule shorter than the stability window");
}

std::vector<std::size_t> OracleReport::counts() const {
  std::vector<std::size_t> c;
  for (const OracleDirection& d : directions) c.push_back(d.count);
  std::sort(c.begin(), c.end());
  return c;
}

double wynn_limit(const std::vector<double>& s) {
  if (s.empty()) throw std::invalid_argument("limit of an empty sequence");
  if (s.size() < 3) return s.back();
  std::vector<double> prev(s.size() + 1, 0.0);
  std::vector<double> cur = s;
  std::vector<double> estimates{s.back()};
  for (std::size_t k = 1; cur.size() > 1; ++k) {
    std::vector<double> next(cur.size() - 1);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0 || !std::isfinite(diff)) {
        ok = false;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (!ok) break;
    if (k % 2 == 0) estimates.push_back(next.back());
    prev = std::move(cur);
    cur = std::move(next);
  }
  // Take the even-column estimate that moved least from its predecessor.
  std::size_t best = 0;
  double best_delta = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < estimates.size(); ++k) {
    const double delta = std::abs(estimates[k] - estimates[k - 1]);
    if (std::isfinite(estimates[k]) && delta < best_delta) {
      best_delta = delta;
      best = k;
    }
  }
  return estimates[best];
}

std::vector<double> circle_crossings(const BivarPoly& f, double radius, const OracleConfig& cfg) {
  cfg.validate();
  return crossings_at(zero_set_basis({f}), radius, Grid(cfg.angular_grid), cfg);
}

OracleReport oracle_k(const BivarPoly& f, const OracleConfig& cfg) { return oracle_k(std::vector<BivarPoly>{f}, cfg); }

OracleReport oracle_k(const std::vector<BivarPoly>& factors, const OracleConfig& cfg) {
  cfg.validate();
  const std::vector<BivarPoly> basis = zero_set_basis(factors);
  const Grid grid(cfg.angular_grid);

  OracleReport rep;
  std::vector<std::vector<double>> angles;
  for (int e = cfg.radius_exp_min; e <= cfg.radius_exp_max; ++e) {
    const double r = std::ldexp(1.0, e);
    rep.radii_used.push_back(r);
    angles.push_back(crossings_at(basis, r, grid, cfg));
    rep.crossings.push_back(angles.back().size());
  }

  const std::size_t last = angles.size() - 1;
  const std::size_t w = cfg.stability_window;
  std::vector<std::vector<Cluster>> windows;
  for (std::size_t t = last + 1 - w; t <= last; ++t) windows.push_back(cluster(limits_at(angles, t), cfg.cluster_tol));

  rep.stable = true;
  for (std::size_t i = 0; i + 1 < windows.size(); ++i)
    rep.stable = rep.stable && angles[last - i].size() == angles[last].size() &&
                 same_clusters(windows[i], windows.back(), cfg.cluster_tol);
  rep.stable = rep.stable && angles[last + 1 - w].size() == angles[last].size();

  for (const Cluster& c : windows.back()) rep.directions.push_back({std::cos(c.angle), std::sin(c.angle), c.count});
  return rep;
}

}  // namespace bsinf
