#include "kernels_impl.hpp"

namespace inflap::kernels::detail {

// Reference kernels. The accumulation mirrors the vector select semantics
// exactly: min(acc, x) = acc < x ? acc : x, max(acc, x) = acc > x ? acc : x.

void stencil_minmax_scalar(const double* v, const int* offsets, int n_offsets,
                           const Span* spans, int n_spans, double* out_min,
                           double* out_max) {
  for (int s = 0; s < n_spans; ++s) {
    for (int i = spans[s].begin; i < spans[s].end; ++i) {
      const double* base = v + i;
      double mn = base[offsets[0]];
      double mx = mn;
      for (int k = 1; k < n_offsets; ++k) {
        double x = base[offsets[k]];
        mn = mn < x ? mn : x;
        mx = mx > x ? mx : x;
      }
      out_min[i] = mn;
      out_max[i] = mx;
    }
  }
}

void stencil_midrange_scalar(const double* v, const int* offsets,
                             int n_offsets, const Span* spans, int n_spans,
                             double* out) {
  for (int s = 0; s < n_spans; ++s) {
    for (int i = spans[s].begin; i < spans[s].end; ++i) {
      const double* base = v + i;
      double mn = base[offsets[0]];
      double mx = mn;
      for (int k = 1; k < n_offsets; ++k) {
        double x = base[offsets[k]];
        mn = mn < x ? mn : x;
        mx = mx > x ? mx : x;
      }
      out[i] = 0.5 * (mn + mx);
    }
  }
}

}  // namespace inflap::kernels::detail
