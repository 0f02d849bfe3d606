#include "bsinf/simd/poly_eval.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bsinf::simd {

DensePoly::DensePoly(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("dense polynomial degree must be nonnegative");
  const auto n = static_cast<std::size_t>(degree + 1);
  c_.assign(n * n, 0.0);
}

DensePoly DensePoly::scaled(const BivarPoly& f, double radius) {
  if (f.is_zero()) throw std::invalid_argument("dense form of the zero polynomial");
  const int d = f.degree();
  DensePoly p(d);
  for (const auto& [m, c] : f.terms()) p.coeff(m.i, m.j) = to_double(c) * std::pow(radius, m.degree() - d);
  return p;
}

double DensePoly::max_abs() const {
  double m = 0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double eval_point(const DensePoly& p, double x, double y) {
  const int d = p.degree();
  double acc = 0;
  for (int i = d; i >= 0; --i) {
    const double* r = p.row(i);
    double q = r[d - i];
    for (int j = d - i - 1; j >= 0; --j) q = std::fma(q, y, r[j]);
    acc = std::fma(acc, x, q);
  }
  return acc;
}

namespace detail {

void eval_scalar(const DensePoly& p, const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = eval_point(p, x[k], y[k]);
}

}  // namespace detail

std::string_view kernel_name(Kernel k) { return k == Kernel::avx2 ? "avx2" : "scalar"; }

bool kernel_available(Kernel k) {
  switch (k) {
    case Kernel::scalar:
      return true;
    case Kernel::avx2:
#if defined(BSINF_HAVE_X86_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Kernel active_kernel() {
  static const Kernel k = [] {
    if (const char* env = std::getenv("BSINF_KERNEL"); env && std::string(env) == "scalar") return Kernel::scalar;
    return kernel_available(Kernel::avx2) ? Kernel::avx2 : Kernel::scalar;
  }();
  return k;
}

void eval_batch(const DensePoly& p, const double* x, const double* y, double* out, std::size_t n, Kernel k) {
  if (!kernel_available(k)) throw std::runtime_error(std::string("kernel not available: ") + std::string(kernel_name(k)));
#if defined(BSINF_HAVE_X86_KERNELS)
  if (k == Kernel::avx2) return detail::eval_avx2(p, x, y, out, n);
#endif
  detail::eval_scalar(p, x, y, out, n);
}

void eval_batch(const DensePoly& p, const double* x, const double* y, double* out, std::size_t n) {
  eval_batch(p, x, y, out, n, active_kernel());
}

}  // namespace bsinf::simd
