#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "bsinf/bivar_poly.hpp"

namespace bsinf::simd {

/// Dense coefficients of a bivariate polynomial of total degree d:
/// coeff(i, j) multiplies x^i y^j, i + j <= d.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(int degree);
  /// Coefficients of f(R x, R y) / R^d, so that values on the unit circle stay
  /// O(1) for large R.
  static DensePoly scaled(const BivarPoly& f, double radius);
  static DensePoly from(const BivarPoly& f) { return scaled(f, 1.0); }

  int degree() const noexcept { return degree_; }
  double& coeff(int i, int j) { return c_[index(i, j)]; }
  double coeff(int i, int j) const { return c_[index(i, j)]; }
  /// Row i holds coeff(i, 0..d-i) contiguously.
  const double* row(int i) const { return c_.data() + index(i, 0); }
  double max_abs() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(degree_ + 1) + static_cast<std::size_t>(j);
  }
  int degree_ = -1;
  std::vector<double> c_;
};

enum class Kernel { scalar, avx2 };

std::string_view kernel_name(Kernel k);
/// Whether the running CPU can execute the given kernel.
bool kernel_available(Kernel k);
/// Best available kernel; BSINF_KERNEL=scalar in the environment forces the
/// reference path.
Kernel active_kernel();

/// out[k] = p(x[k], y[k]) by nested Horner with fused multiply-add. Every kernel
/// performs the same operations in the same order, so results are bit-identical.
void eval_batch(const DensePoly& p, const double* x, const double* y, double* out, std::size_t n, Kernel k);
void eval_batch(const DensePoly& p, const double* x, const double* y, double* out, std::size_t n);

/// Single point, scalar reference.
double eval_point(const DensePoly& p, double x, double y);

namespace detail {
void eval_scalar(const DensePoly& p, const double* x, const double* y, double* out, std::size_t n);
#if defined(BSINF_HAVE_X86_KERNELS)
void eval_avx2(const DensePoly& p, const double* x, const double* y, double* out, std::size_t n);
#endif
}  // namespace detail

}  // namespace bsinf::simd
