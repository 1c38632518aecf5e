#include "kernels_detail.hpp"

#include <cmath>

namespace gridplan::kernels::detail {

// Reference kernels. The 4-accumulator layout is the contract every SIMD
// backend reproduces lane-for-lane, including the tail handling.

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    a0 += x[i] * y[i];
    a1 += x[i + 1] * y[i + 1];
    a2 += x[i + 2] * y[i + 2];
    a3 += x[i + 3] * y[i + 3];
  }
  if (n - n4 > 0) a0 += x[n4] * y[n4];
  if (n - n4 > 1) a1 += x[n4 + 1] * y[n4 + 1];
  if (n - n4 > 2) a2 += x[n4 + 2] * y[n4 + 2];
  return (a0 + a1) + (a2 + a3);
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

std::size_t argmax_abs_scalar(const double* x, std::size_t n) {
  std::size_t best = 0;
  double best_abs = std::fabs(x[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const double v = std::fabs(x[i]);
    if (v > best_abs) {
      best_abs = v;
      best = i;
    }
  }
  return best;
}

}  // namespace gridplan::kernels::detail
