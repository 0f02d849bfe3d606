#include "bsinf/simd/poly_eval.hpp"

#if defined(BSINF_HAVE_X86_KERNELS)

#include <immintrin.h>

namespace bsinf::simd::detail {

__attribute__((target("avx2,fma"))) void eval_avx2(const DensePoly& p, const double* x, const double* y, double* out,
                                                   std::size_t n) {
  const int d = p.degree();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vx = _mm256_loadu_pd(x + k);
    const __m256d vy = _mm256_loadu_pd(y + k);
    __m256d acc = _mm256_setzero_pd();
    for (int i = d; i >= 0; --i) {
      const double* r = p.row(i);
      __m256d q = _mm256_set1_pd(r[d - i]);
      for (int j = d - i - 1; j >= 0; --j) q = _mm256_fmadd_pd(q, vy, _mm256_set1_pd(r[j]));
      acc = _mm256_fmadd_pd(acc, vx, q);
    }
    _mm256_storeu_pd(out + k, acc);
  }
  for (; k < n; ++k) out[k] = eval_point(p, x[k], y[k]);
}

}  // namespace bsinf::simd::detail

#endif
