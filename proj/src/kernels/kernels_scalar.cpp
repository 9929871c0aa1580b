#include <cmath>

#include "boundnet/kernels/kernels.hpp"

// Reference kernels. Kept to straight-line mul/add sequences (and built with
// FP contraction off) so the SIMD variants can match them bit for bit.

namespace boundnet::kernels::scalar {

void sample_halfplane(const double* xs, const double* ys, std::size_t n,
                      double nx, double ny, double offset,
                      double v_in, double v_out, double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        const double t = nx * xs[k] + ny * ys[k];
        out[k] = t >= offset ? v_in : v_out;
    }
}

void sample_disk(const double* xs, const double* ys, std::size_t n,
                 double cx, double cy, double r2,
                 double v_in, double v_out, double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = xs[k] - cx;
        const double dy = ys[k] - cy;
        const double q = dx * dx + dy * dy;
        out[k] = q <= r2 ? v_in : v_out;
    }
}

void scale(const double* vals, std::size_t n, double s, double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = s * vals[k];
    }
}

void classify_edges(const double* readings, const int32_t* ei,
                    const int32_t* ej, std::size_t m, double theta,
                    uint8_t* out) {
    for (std::size_t k = 0; k < m; ++k) {
        const double diff = readings[ei[k]] - readings[ej[k]];
        out[k] = std::fabs(diff) > theta ? 1 : 0;
    }
}

} // namespace boundnet::kernels::scalar
