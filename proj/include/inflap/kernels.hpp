#pragma once

namespace inflap::kernels {

/// Half-open range [begin, end) of flat node indices. Spans cover the bulk
/// interior rows where every stencil offset lands on a valued node, so the
/// same offset list applies uniformly and the sweep vectorizes.
struct Span {
  int begin;
  int end;
};

enum class Backend { Auto, Scalar, Avx2 };

/// For every node i in the spans, writes min and max of v[i + offsets[k]]
/// over the offset list into out_min[i] / out_max[i]. Offsets must stay in
/// bounds for all span nodes; n_offsets >= 1.
void stencil_minmax(const double* v, const int* offsets, int n_offsets,
                    const Span* spans, int n_spans, double* out_min,
                    double* out_max);

/// Fused variant writing the midrange 0.5 * (min + max) into out[i].
void stencil_midrange(const double* v, const int* offsets, int n_offsets,
                      const Span* spans, int n_spans, double* out);

/// Selects the implementation. Auto probes CPU features once (AVX2 when
/// available) and honors the INFLAP_KERNEL environment variable
/// ("scalar" | "avx2"). Scalar and AVX2 paths are bitwise equivalent:
/// min/max are exact operations and the midrange combine is identical.
void set_backend(Backend b);
Backend active_backend();
const char* active_backend_name();
bool avx2_available();

}  // namespace inflap::kernels
