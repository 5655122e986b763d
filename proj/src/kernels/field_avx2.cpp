#include "workbench/field_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define WB_HAVE_X86 1
#endif

namespace wb::kernels {

#ifdef WB_HAVE_X86

__attribute__((target("avx2"))) void field_avx2(const FieldBatch& b) {
  const std::size_t n = b.xs.size();
  const std::size_t terms = b.coeffs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(b.xs.data() + i);
    const __m256d y = _mm256_loadu_pd(b.ys.data() + i);
    const __m256d yy = _mm256_mul_pd(y, y);
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t j = 0; j < terms; ++j) {
      const __m256d dx = _mm256_sub_pd(x, _mm256_set1_pd(b.poles[j]));
      const __m256d den = _mm256_add_pd(_mm256_mul_pd(dx, dx), yy);
      const __m256d q = _mm256_div_pd(_mm256_set1_pd(b.coeffs[j]), den);
      re = _mm256_add_pd(re, _mm256_mul_pd(q, dx));
      im = _mm256_sub_pd(im, _mm256_mul_pd(q, y));
    }
    _mm256_storeu_pd(b.re.data() + i, re);
    _mm256_storeu_pd(b.im.data() + i, im);
  }
  if (i < n) {
    field_scalar({b.xs.subspan(i), b.ys.subspan(i), b.coeffs, b.poles, b.re.subspan(i), b.im.subspan(i)});
  }
}

#else

void field_avx2(const FieldBatch& b) { field_scalar(b); }

#endif

}  // namespace wb::kernels
