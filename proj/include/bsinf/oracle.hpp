#pragma once

#include <cstddef>
#include <vector>

#include "bsinf/bivar_poly.hpp"

namespace bsinf {

struct OracleConfig {
  int radius_exp_min = 4;  // radii 2^min .. 2^max
  int radius_exp_max = 20;
  std::size_t angular_grid = std::size_t{1} << 14;
  double cluster_tol = 1e-3;  // radians
  std::size_t stability_window = 3;
  /// |f(R u)| / R^d below this (relative to the largest coefficient) at a grid
  /// minimum triggers a fine local scan for crossings the grid missed.
  double probe_threshold = 1e-9;
  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

struct OracleDirection {
  double x = 0;
  double y = 0;  // unit vector
  std::size_t count = 0;
};

struct OracleReport {
  std::vector<OracleDirection> directions;  // sorted by angle in [0, 2 pi)
  bool stable = false;
  std::vector<double> radii_used;
  /// Crossing count at each radius, same order as radii_used.
  std::vector<std::size_t> crossings;

  /// Sorted multiset of direction counts.
  std::vector<std::size_t> counts() const;
};

/// Floating-point estimate of the directions at infinity and their branch
/// counts, from circle crossings at growing radii. Deterministic.
OracleReport oracle_k(const BivarPoly& f, const OracleConfig& cfg = {});

/// Same, sampling each factor separately so that nearby crossings from
/// different factors are never merged by cancellation.
OracleReport oracle_k(const std::vector<BivarPoly>& factors, const OracleConfig& cfg = {});

/// Sorted crossing angles in [0, 2 pi) of {f = 0} with the circle of radius R.
std::vector<double> circle_crossings(const BivarPoly& f, double radius, const OracleConfig& cfg = {});

/// Limit of a sequence by Wynn's epsilon algorithm (last value when the
/// table degenerates immediately).
double wynn_limit(const std::vector<double>& s);

}  // namespace bsinf
