#include "kernels_impl.hpp"

#if INFLAP_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace inflap::kernels::detail {

// 4 nodes per iteration; the per-node reduction order over offsets matches
// the scalar kernel, and vminpd/vmaxpd use the same select semantics, so the
// results are bitwise identical.

void stencil_minmax_avx2(const double* v, const int* offsets, int n_offsets,
                         const Span* spans, int n_spans, double* out_min,
                         double* out_max) {
  for (int s = 0; s < n_spans; ++s) {
    int i = spans[s].begin;
    int end = spans[s].end;
    for (; i + 4 <= end; i += 4) {
      const double* base = v + i;
      __m256d mn = _mm256_loadu_pd(base + offsets[0]);
      __m256d mx = mn;
      for (int k = 1; k < n_offsets; ++k) {
        __m256d x = _mm256_loadu_pd(base + offsets[k]);
        mn = _mm256_min_pd(mn, x);
        mx = _mm256_max_pd(mx, x);
      }
      _mm256_storeu_pd(out_min + i, mn);
      _mm256_storeu_pd(out_max + i, mx);
    }
    if (i < end) {
      Span tail{i, end};
      stencil_minmax_scalar(v, offsets, n_offsets, &tail, 1, out_min, out_max);
    }
  }
}

void stencil_midrange_avx2(const double* v, const int* offsets, int n_offsets,
                           const Span* spans, int n_spans, double* out) {
  const __m256d half = _mm256_set1_pd(0.5);
  for (int s = 0; s < n_spans; ++s) {
    int i = spans[s].begin;
    int end = spans[s].end;
    for (; i + 4 <= end; i += 4) {
      const double* base = v + i;
      __m256d mn = _mm256_loadu_pd(base + offsets[0]);
      __m256d mx = mn;
      for (int k = 1; k < n_offsets; ++k) {
        __m256d x = _mm256_loadu_pd(base + offsets[k]);
        mn = _mm256_min_pd(mn, x);
        mx = _mm256_max_pd(mx, x);
      }
      _mm256_storeu_pd(out + i, _mm256_mul_pd(half, _mm256_add_pd(mn, mx)));
    }
    if (i < end) {
      Span tail{i, end};
      stencil_midrange_scalar(v, offsets, n_offsets, &tail, 1, out);
    }
  }
}

}  // namespace inflap::kernels::detail

#endif  // INFLAP_HAVE_AVX2_KERNELS
