#pragma once

#include <cstddef>
#include <cstdint>

namespace boundnet::kernels {

/// Backend used for the data-parallel inner loops. Auto resolves to Avx2
/// when the CPU supports it, otherwise Scalar. The scalar kernels are the
/// reference; the SIMD variants are bit-identical (all targets are built
/// with FP contraction off, so operation order matches lane for lane).
enum class Backend { Auto, Scalar, Avx2 };

/// Resolved backend currently in use.
Backend active_backend();

/// Overrides the backend. Requesting Avx2 on a CPU without it falls back
/// to Scalar. Intended for tests and benchmarking; not thread-safe against
/// concurrent kernel calls.
void set_backend(Backend b);

bool cpu_has_avx2();

// out[k] = v_in if nx*xs[k] + ny*ys[k] >= offset else v_out
void sample_halfplane(const double* xs, const double* ys, std::size_t n,
                      double nx, double ny, double offset,
                      double v_in, double v_out, double* out);

// out[k] = v_in if (xs[k]-cx)^2 + (ys[k]-cy)^2 <= r2 else v_out
void sample_disk(const double* xs, const double* ys, std::size_t n,
                 double cx, double cy, double r2,
                 double v_in, double v_out, double* out);

// out[k] = s * vals[k]
void scale(const double* vals, std::size_t n, double s, double* out);

// out[k] = 1 if |readings[ei[k]] - readings[ej[k]]| > theta else 0
void classify_edges(const double* readings, const int32_t* ei,
                    const int32_t* ej, std::size_t m, double theta,
                    uint8_t* out);

// Reference and SIMD entry points, exposed for equivalence tests.
namespace scalar {
void sample_halfplane(const double* xs, const double* ys, std::size_t n,
                      double nx, double ny, double offset,
                      double v_in, double v_out, double* out);
void sample_disk(const double* xs, const double* ys, std::size_t n,
                 double cx, double cy, double r2,
                 double v_in, double v_out, double* out);
void scale(const double* vals, std::size_t n, double s, double* out);
void classify_edges(const double* readings, const int32_t* ei,
                    const int32_t* ej, std::size_t m, double theta,
                    uint8_t* out);
} // namespace scalar

#if defined(BOUNDNET_HAVE_AVX2)
namespace avx2 {
void sample_halfplane(const double* xs, const double* ys, std::size_t n,
                      double nx, double ny, double offset,
                      double v_in, double v_out, double* out);
void sample_disk(const double* xs, const double* ys, std::size_t n,
                 double cx, double cy, double r2,
                 double v_in, double v_out, double* out);
void scale(const double* vals, std::size_t n, double s, double* out);
void classify_edges(const double* readings, const int32_t* ei,
                    const int32_t* ej, std::size_t m, double theta,
                    uint8_t* out);
} // namespace avx2
#endif

} // namespace boundnet::kernels
