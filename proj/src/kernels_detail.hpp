#pragma once

#include <cstddef>

namespace gridplan::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double a, double* x, std::size_t n);
std::size_t argmax_abs_scalar(const double* x, std::size_t n);

#if defined(GRIDPLAN_HAVE_AVX2)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double a, double* x, std::size_t n);
std::size_t argmax_abs_avx2(const double* x, std::size_t n);
#endif

}  // namespace gridplan::kernels::detail
