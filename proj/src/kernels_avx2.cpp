// Compiled with -mavx2 -mfma. Only reached after avx2::cpu_supported().

#include <immintrin.h>

#include "kernels_avx2_impl.hpp"

namespace isopencil::kernels::avx2 {
namespace {

// alpha * x for two packed complex numbers, alpha broadcast as (re, im).
inline __m256d cmul_bcast(__m256d are, __m256d aim, __m256d x) {
  const __m256d xswap = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(are, x, _mm256_mul_pd(aim, xswap));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of even lanes and sum of odd lanes.
inline void hsum_even_odd(__m256d v, double& even, double& odd) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  even = _mm_cvtsd_f64(s);
  odd = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

bool cpu_supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void caxpy(std::size_t n, const double* alpha, const double* x, double* y) {
  const __m256d are = _mm256_set1_pd(alpha[0]);
  const __m256d aim = _mm256_set1_pd(alpha[1]);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(yv, cmul_bcast(are, aim, xv)));
  }
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    y[2 * i] += alpha[0] * xr - alpha[1] * xi;
    y[2 * i + 1] += alpha[0] * xi + alpha[1] * xr;
  }
}

void cdotu(std::size_t n, const double* x, const double* y, double* out) {
  __m256d straight = _mm256_setzero_pd();  // (xr yr, xi yi)
  __m256d crossed = _mm256_setzero_pd();   // (xr yi, xi yr)
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    straight = _mm256_fmadd_pd(xv, yv, straight);
    crossed = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), crossed);
  }
  double rr, ii, ri, ir;
  hsum_even_odd(straight, rr, ii);
  hsum_even_odd(crossed, ri, ir);
  double re = rr - ii;
  double im = ri + ir;
  for (; i < n; ++i) {
    re += x[2 * i] * y[2 * i] - x[2 * i + 1] * y[2 * i + 1];
    im += x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i];
  }
  out[0] = re;
  out[1] = im;
}

void cdotc(std::size_t n, const double* x, const double* y, double* out) {
  __m256d straight = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    straight = _mm256_fmadd_pd(xv, yv, straight);
    crossed = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), crossed);
  }
  double rr, ii, ri, ir;
  hsum_even_odd(straight, rr, ii);
  hsum_even_odd(crossed, ri, ir);
  double re = rr + ii;
  double im = ri - ir;
  for (; i < n; ++i) {
    re += x[2 * i] * y[2 * i] + x[2 * i + 1] * y[2 * i + 1];
    im += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  }
  out[0] = re;
  out[1] = im;
}

void crot(std::size_t n, double* x, double* y, const double* abcd) {
  const __m256d are = _mm256_set1_pd(abcd[0]), aim = _mm256_set1_pd(abcd[1]);
  const __m256d bre = _mm256_set1_pd(abcd[2]), bim = _mm256_set1_pd(abcd[3]);
  const __m256d cre = _mm256_set1_pd(abcd[4]), cim = _mm256_set1_pd(abcd[5]);
  const __m256d dre = _mm256_set1_pd(abcd[6]), dim = _mm256_set1_pd(abcd[7]);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    const __m256d xn = _mm256_add_pd(cmul_bcast(are, aim, xv), cmul_bcast(bre, bim, yv));
    const __m256d yn = _mm256_add_pd(cmul_bcast(cre, cim, xv), cmul_bcast(dre, dim, yv));
    _mm256_storeu_pd(x + 2 * i, xn);
    _mm256_storeu_pd(y + 2 * i, yn);
  }
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    x[2 * i] = abcd[0] * xr - abcd[1] * xi + abcd[2] * yr - abcd[3] * yi;
    x[2 * i + 1] = abcd[0] * xi + abcd[1] * xr + abcd[2] * yi + abcd[3] * yr;
    y[2 * i] = abcd[4] * xr - abcd[5] * xi + abcd[6] * yr - abcd[7] * yi;
    y[2 * i + 1] = abcd[4] * xi + abcd[5] * xr + abcd[6] * yi + abcd[7] * yr;
  }
}

double dnrm2sq(std::size_t n, const double* x) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d a = _mm256_loadu_pd(x + i);
    const __m256d b = _mm256_loadu_pd(x + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(x + i);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double ddot(std::size_t n, const double* x, const double* y) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void drot(std::size_t n, double* x, double* y, double c, double s) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(x + i, _mm256_fmsub_pd(cv, xv, _mm256_mul_pd(sv, yv)));
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(sv, xv, _mm256_mul_pd(cv, yv)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

}  // namespace isopencil::kernels::avx2
