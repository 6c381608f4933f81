#include "inflap/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace inflap::kernels {

namespace {

Backend g_requested = Backend::Auto;

bool cpu_has_avx2() {
#if INFLAP_HAVE_AVX2_KERNELS && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend resolve() {
  if (g_requested != Backend::Auto) return g_requested;
  if (const char* env = std::getenv("INFLAP_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::Avx2;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

bool avx2_available() { return cpu_has_avx2(); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !cpu_has_avx2()) b = Backend::Scalar;
  g_requested = b;
}

Backend active_backend() { return resolve(); }

const char* active_backend_name() {
  return resolve() == Backend::Avx2 ? "avx2" : "scalar";
}

void stencil_minmax(const double* v, const int* offsets, int n_offsets,
                    const Span* spans, int n_spans, double* out_min,
                    double* out_max) {
#if INFLAP_HAVE_AVX2_KERNELS
  if (resolve() == Backend::Avx2) {
    detail::stencil_minmax_avx2(v, offsets, n_offsets, spans, n_spans, out_min,
                                out_max);
    return;
  }
#endif
  detail::stencil_minmax_scalar(v, offsets, n_offsets, spans, n_spans, out_min,
                                out_max);
}

void stencil_midrange(const double* v, const int* offsets, int n_offsets,
                      const Span* spans, int n_spans, double* out) {
#if INFLAP_HAVE_AVX2_KERNELS
  if (resolve() == Backend::Avx2) {
    detail::stencil_midrange_avx2(v, offsets, n_offsets, spans, n_spans, out);
    return;
  }
#endif
  detail::stencil_midrange_scalar(v, offsets, n_offsets, spans, n_spans, out);
}

}  // namespace inflap::kernels
