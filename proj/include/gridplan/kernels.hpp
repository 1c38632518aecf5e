#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace gridplan::kernels {

// Dense vector kernels used by the simplex engine's inner loops (LU
// elimination, triangular solves, pivot search). Every backend computes
// bit-identical results: a fixed 4-lane accumulation order and no FMA
// contraction, so the runtime backend choice never changes solver output.

enum class Backend { Scalar, Avx2 };

Backend active_backend();
bool backend_available(Backend b);
// Switches the active backend; returns false (and leaves it unchanged)
// if the requested backend is not available on this CPU.
bool set_backend(Backend b);
std::string_view backend_name(Backend b);

// y += a * x. x and y must not alias.
void axpy(double a, std::span<const double> x, std::span<double> y);

// Sum of x[i] * y[i] in the fixed 4-lane order.
double dot(std::span<const double> x, std::span<const double> y);

// x *= a.
void scale(double a, std::span<double> x);

// First index attaining max |x[i]|. x must be non-empty.
std::size_t argmax_abs(std::span<const double> x);

}  // namespace gridplan::kernels
