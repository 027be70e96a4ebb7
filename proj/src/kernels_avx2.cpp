#include "hcube/kernels.hpp"

#if defined(HCUBE_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace hcube::kern {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* w, const double* v, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(v + i + 4), acc1);
  }
  if (i + 4 <= len) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i), acc0);
    i += 4;
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) acc += w[i] * v[i];
  return acc;
}

double dot_abs_avx2(const double* w, const double* v, std::size_t len) {
  const __m256d signbit = _mm256_set1_pd(-0.0);
  __m256d acc0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d a = _mm256_andnot_pd(signbit, _mm256_loadu_pd(v + i));
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), a, acc0);
  }
  double acc = hsum(acc0);
  for (; i < len; ++i) acc += w[i] * std::fabs(v[i]);
  return acc;
}

double dot_sq_avx2(const double* w, const double* v, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d a = _mm256_loadu_pd(v + i);
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_mul_pd(a, a), acc0);
  }
  double acc = hsum(acc0);
  for (; i < len; ++i) acc += w[i] * v[i] * v[i];
  return acc;
}

double dot_sqrt_avx2(const double* w, const double* v, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d a = _mm256_sqrt_pd(_mm256_loadu_pd(v + i));
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), a, acc0);
  }
  double acc = hsum(acc0);
  for (; i < len; ++i) acc += w[i] * std::sqrt(v[i]);
  return acc;
}

double sum_avx2(const double* w, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(w + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(w + i + 4));
  }
  if (i + 4 <= len) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(w + i));
    i += 4;
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) acc += w[i];
  return acc;
}

double masked_sum_avx2(const double* w, const std::uint64_t* bits,
                       std::size_t len) {
  const __m256i one = _mm256_set1_epi64x(1);
  __m256d acc0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    std::uint64_t word = bits[i >> 6];
    __m256i sh = _mm256_set_epi64x((i + 3) & 63, (i + 2) & 63, (i + 1) & 63, i & 63);
    __m256i b = _mm256_and_si256(_mm256_srlv_epi64(_mm256_set1_epi64x(word), sh), one);
    __m256d mask = _mm256_castsi256_pd(_mm256_cmpeq_epi64(b, one));
    acc0 = _mm256_add_pd(acc0, _mm256_and_pd(mask, _mm256_loadu_pd(w + i)));
  }
  double acc = hsum(acc0);
  for (; i < len; ++i)
    if ((bits[i >> 6] >> (i & 63)) & 1u) acc += w[i];
  return acc;
}

void mix_pass_avx2(double* v, std::size_t len, std::size_t stride,
                   const double c[4]) {
  const __m256d c00 = _mm256_set1_pd(c[0]);
  const __m256d c01 = _mm256_set1_pd(c[1]);
  const __m256d c10 = _mm256_set1_pd(c[2]);
  const __m256d c11 = _mm256_set1_pd(c[3]);
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    double* lo = v + base;
    double* hi = v + base + stride;
    std::size_t i = 0;
    for (; i + 4 <= stride; i += 4) {
      __m256d a = _mm256_loadu_pd(lo + i);
      __m256d b = _mm256_loadu_pd(hi + i);
      _mm256_storeu_pd(lo + i, _mm256_fmadd_pd(c00, a, _mm256_mul_pd(c01, b)));
      _mm256_storeu_pd(hi + i, _mm256_fmadd_pd(c10, a, _mm256_mul_pd(c11, b)));
    }
    for (; i < stride; ++i) {
      double a = lo[i], b = hi[i];
      lo[i] = c[0] * a + c[1] * b;
      hi[i] = c[2] * a + c[3] * b;
    }
  }
}

}  // namespace

const Dispatch& avx2_kernels() {
  static const Dispatch d{"avx2",      dot_avx2,        dot_abs_avx2,
                          dot_sq_avx2, dot_sqrt_avx2,   sum_avx2,
                          masked_sum_avx2, mix_pass_avx2};
  return d;
}

}  // namespace hcube::kern

#endif  // HCUBE_HAVE_AVX2
