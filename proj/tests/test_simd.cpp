#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include "bsinf/parser.hpp"
#include "bsinf/simd/poly_eval.hpp"

using namespace bsinf;
using namespace bsinf::simd;

namespace {

DensePoly random_dense(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g;
  DensePoly p(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) p.coeff(i, j) = g(rng);
  return p;
}

// Independent reference: direct power sums in long double.
long double naive(const DensePoly& p, double x, double y) {
  long double s = 0;
  for (int i = 0; i <= p.degree(); ++i)
    for (int j = 0; i + j <= p.degree(); ++j)
      s += static_cast<long double>(p.coeff(i, j)) * std::pow(static_cast<long double>(x), i) *
           std::pow(static_cast<long double>(y), j);
  return s;
}

}  // namespace

TEST_CASE("scaled coefficients") {
  const DensePoly p = DensePoly::scaled(parse_poly("y^2 - x^3 + 4"), 2.0);
  CHECK(p.degree() == 3);
  CHECK(p.coeff(3, 0) == -1.0);
  CHECK(p.coeff(0, 2) == 0.5);
  CHECK(p.coeff(0, 0) == 0.5);
  CHECK(p.max_abs() == 1.0);
}

TEST_CASE("scalar kernel matches a naive evaluation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int d : {0, 1, 2, 5, 9}) {
    const DensePoly p = random_dense(rng, d);
    std::vector<double> x(37), y(37), out(37);
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] = u(rng);
      y[k] = u(rng);
    }
    eval_batch(p, x.data(), y.data(), out.data(), x.size(), Kernel::scalar);
    for (std::size_t k = 0; k < x.size(); ++k) {
      CHECK(static_cast<double>(std::abs(out[k] - naive(p, x[k], y[k]))) <= 1e-12);
      CHECK(out[k] == eval_point(p, x[k], y[k]));
    }
  }
}

TEST_CASE("vector kernel is bit-identical to the scalar kernel") {
  if (!kernel_available(Kernel::avx2)) {
    MESSAGE("AVX2/FMA not available; vector kernel not exercised");
    return;
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int d = 0; d <= 14; ++d) {
    const DensePoly p = random_dense(rng, d);
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4}, std::size_t{7},
                          std::size_t{64}, std::size_t{1023}}) {
      std::vector<double> x(n), y(n), a(n), b(n);
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = u(rng);
        y[k] = u(rng);
      }
      eval_batch(p, x.data(), y.data(), a.data(), n, Kernel::scalar);
      eval_batch(p, x.data(), y.data(), b.data(), n, Kernel::avx2);
      CHECK(std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("dispatch") {
  CHECK(kernel_available(Kernel::scalar));
  CHECK(kernel_name(Kernel::scalar) == "scalar");
  CHECK(kernel_name(Kernel::avx2) == "avx2");
  CHECK(kernel_available(active_kernel()));
  // The choice is made once per process; the forced case runs as its own ctest entry.
  const char* env = std::getenv("BSINF_KERNEL");
  if (env && std::string(env) == "scalar")
    CHECK(active_kernel() == Kernel::scalar);
  else if (kernel_available(Kernel::avx2))
    CHECK(active_kernel() == Kernel::avx2);
}
