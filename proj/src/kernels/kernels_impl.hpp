#pragma once

#include "inflap/kernels.hpp"

namespace inflap::kernels::detail {

void stencil_minmax_scalar(const double* v, const int* offsets, int n_offsets,
                           const Span* spans, int n_spans, double* out_min,
                           double* out_max);
void stencil_midrange_scalar(const double* v, const int* offsets,
                             int n_offsets, const Span* spans, int n_spans,
                             double* out);

#if defined(__x86_64__) || defined(_M_X64)
#define INFLAP_HAVE_AVX2_KERNELS 1
void stencil_minmax_avx2(const double* v, const int* offsets, int n_offsets,
                         const Span* spans, int n_spans, double* out_min,
                         double* out_max);
void stencil_midrange_avx2(const double* v, const int* offsets, int n_offsets,
                           const Span* spans, int n_spans, double* out);
#else
#define INFLAP_HAVE_AVX2_KERNELS 0
#endif

}  // namespace inflap::kernels::detail
