#include "kernels_detail.hpp"

#if defined(GRIDPLAN_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace gridplan::kernels::detail {

// Mirrors the scalar reference exactly: the vector accumulator lanes are
// the scalar a0..a3, multiplies and adds are separate instructions (no
// FMA), and the tail uses the same per-lane scalar updates.

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(vx, vy));
  }
  alignas(32) double a[4];
  _mm256_store_pd(a, acc);
  if (n - n4 > 0) a[0] += x[n4] * y[n4];
  if (n - n4 > 1) a[1] += x[n4 + 1] * y[n4 + 1];
  if (n - n4 > 2) a[2] += x[n4 + 2] * y[n4 + 2];
  return (a[0] + a[1]) + (a[2] + a[3]);
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (std::size_t i = n4; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (std::size_t i = n4; i < n; ++i) x[i] *= a;
}

std::size_t argmax_abs_avx2(const double* x, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d vmax = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d va = _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i));
    vmax = _mm256_max_pd(vmax, va);
  }
  alignas(32) double m[4];
  _mm256_store_pd(m, vmax);
  double best_abs = (m[0] > m[1] ? m[0] : m[1]);
  if (m[2] > best_abs) best_abs = m[2];
  if (m[3] > best_abs) best_abs = m[3];
  for (std::size_t i = n4; i < n; ++i) {
    const double v = std::fabs(x[i]);
    if (v > best_abs) best_abs = v;
  }
  // Max value is order-independent; recover the first attaining index.
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(x[i]) == best_abs) return i;
  }
  return 0;
}

}  // namespace gridplan::kernels::detail

#endif  // GRIDPLAN_HAVE_AVX2
