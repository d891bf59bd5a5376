#include <immintrin.h>

#include "seesaw/kernels.hpp"

namespace seesaw::kernels::avx2 {

namespace {
inline __m256d horner4(const double* c, std::size_t d, __m256d t) {
  __m256d r = _mm256_setzero_pd();
  for (std::size_t j = d; j-- > 0;) r = _mm256_fmadd_pd(r, t, _mm256_set1_pd(c[j]));
  return r;
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}
}  // namespace

double poly_pair_weighted_sum(const double* c1, std::size_t d1, const double* c2, std::size_t d2,
                              const double* t, const double* g, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d tv = _mm256_loadu_pd(t + i);
    __m256d p = _mm256_mul_pd(horner4(c1, d1, tv), horner4(c2, d2, tv));
    acc = _mm256_fmadd_pd(p, _mm256_loadu_pd(g + i), acc);
  }
  double s = hsum(acc);
  if (i < n) s += scalar::poly_pair_weighted_sum(c1, d1, c2, d2, t + i, g + i, n - i);
  return s;
}

void qseries_horner(const double* a_re, const double* a_im, std::size_t ncoef, const double* q_re,
                    const double* q_im, double* out_re, double* out_im, std::size_t npts) {
  std::size_t i = 0;
  for (; i + 4 <= npts; i += 4) {
    __m256d xr = _mm256_loadu_pd(q_re + i), xi = _mm256_loadu_pd(q_im + i);
    __m256d r = _mm256_setzero_pd(), s = _mm256_setzero_pd();
    for (std::size_t m = ncoef; m-- > 0;) {
      __m256d nr = _mm256_fmsub_pd(r, xr, _mm256_fmsub_pd(s, xi, _mm256_set1_pd(a_re[m])));
      s = _mm256_fmadd_pd(r, xi, _mm256_fmadd_pd(s, xr, _mm256_set1_pd(a_im[m])));
      r = nr;
    }
    _mm256_storeu_pd(out_re + i, r);
    _mm256_storeu_pd(out_im + i, s);
  }
  if (i < npts) scalar::qseries_horner(a_re, a_im, ncoef, q_re + i, q_im + i, out_re + i, out_im + i, npts - i);
}

}  // namespace seesaw::kernels::avx2
