#include "gridplan/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_detail.hpp"

namespace gridplan::kernels {
namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);
using ScaleFn = void (*)(double, double*, std::size_t);
using ArgmaxFn = std::size_t (*)(const double*, std::size_t);

struct Dispatch {
  Backend backend;
  DotFn dot;
  AxpyFn axpy;
  ScaleFn scale;
  ArgmaxFn argmax_abs;
};

constexpr Dispatch kScalar{Backend::Scalar, detail::dot_scalar, detail::axpy_scalar,
                           detail::scale_scalar, detail::argmax_abs_scalar};

#if defined(GRIDPLAN_HAVE_AVX2)
constexpr Dispatch kAvx2{Backend::Avx2, detail::dot_avx2, detail::axpy_avx2,
                         detail::scale_avx2, detail::argmax_abs_avx2};
#endif

bool cpu_has_avx2() {
#if defined(GRIDPLAN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Dispatch pick_initial() {
  const char* env = std::getenv("GRIDPLAN_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return kScalar;
#if defined(GRIDPLAN_HAVE_AVX2)
  if (cpu_has_avx2()) return kAvx2;
#endif
  return kScalar;
}

Dispatch g_dispatch = pick_initial();

}  // namespace

Backend active_backend() { return g_dispatch.backend; }

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
  return cpu_has_avx2();
}

bool set_backend(Backend b) {
  if (!backend_available(b)) return false;
  switch (b) {
    case Backend::Scalar:
      g_dispatch = kScalar;
      return true;
    case Backend::Avx2:
#if defined(GRIDPLAN_HAVE_AVX2)
      g_dispatch = kAvx2;
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::string_view backend_name(Backend b) {
  return b == Backend::Scalar ? "scalar" : "avx2";
}

double dot(std::span<const double> x, std::span<const double> y) {
  return g_dispatch.dot(x.data(), y.data(), x.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  g_dispatch.axpy(a, x.data(), y.data(), x.size());
}

void scale(double a, std::span<double> x) { g_dispatch.scale(a, x.data(), x.size()); }

std::size_t argmax_abs(std::span<const double> x) {
  return g_dispatch.argmax_abs(x.data(), x.size());
}

}  // namespace gridplan::kernels
