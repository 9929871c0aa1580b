#include "boundnet/kernels/kernels.hpp"

#if defined(BOUNDNET_HAVE_AVX2)

#include <immintrin.h>

// AVX2 variants of the inner loops, 4 doubles per lane. No FMA: each kernel
// issues the same mul/add sequence as the scalar reference so results are
// bit-identical. Tails fall through to the reference implementation.

namespace boundnet::kernels::avx2 {

namespace {
inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}
} // namespace

void sample_halfplane(const double* xs, const double* ys, std::size_t n,
                      double nx, double ny, double offset,
                      double v_in, double v_out, double* out) {
    const __m256d vnx = _mm256_set1_pd(nx);
    const __m256d vny = _mm256_set1_pd(ny);
    const __m256d voff = _mm256_set1_pd(offset);
    const __m256d vin = _mm256_set1_pd(v_in);
    const __m256d vout = _mm256_set1_pd(v_out);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d x = _mm256_loadu_pd(xs + k);
        const __m256d y = _mm256_loadu_pd(ys + k);
        const __m256d t =
            _mm256_add_pd(_mm256_mul_pd(vnx, x), _mm256_mul_pd(vny, y));
        const __m256d ge = _mm256_cmp_pd(t, voff, _CMP_GE_OQ);
        _mm256_storeu_pd(out + k, _mm256_blendv_pd(vout, vin, ge));
    }
    scalar::sample_halfplane(xs + k, ys + k, n - k, nx, ny, offset, v_in, v_out,
                             out + k);
}

void sample_disk(const double* xs, const double* ys, std::size_t n,
                 double cx, double cy, double r2,
                 double v_in, double v_out, double* out) {
    const __m256d vcx = _mm256_set1_pd(cx);
    const __m256d vcy = _mm256_set1_pd(cy);
    const __m256d vr2 = _mm256_set1_pd(r2);
    const __m256d vin = _mm256_set1_pd(v_in);
    const __m256d vout = _mm256_set1_pd(v_out);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + k), vcx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + k), vcy);
        const __m256d q =
            _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const __m256d le = _mm256_cmp_pd(q, vr2, _CMP_LE_OQ);
        _mm256_storeu_pd(out + k, _mm256_blendv_pd(vout, vin, le));
    }
    scalar::sample_disk(xs + k, ys + k, n - k, cx, cy, r2, v_in, v_out, out + k);
}

void scale(const double* vals, std::size_t n, double s, double* out) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(out + k, _mm256_mul_pd(vs, _mm256_loadu_pd(vals + k)));
    }
    scalar::scale(vals + k, n - k, s, out + k);
}

void classify_edges(const double* readings, const int32_t* ei,
                    const int32_t* ej, std::size_t m, double theta,
                    uint8_t* out) {
    const __m256d vtheta = _mm256_set1_pd(theta);
    std::size_t k = 0;
    for (; k + 4 <= m; k += 4) {
        const __m128i ii =
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(ei + k));
        const __m128i jj =
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(ej + k));
        const __m256d ri = _mm256_i32gather_pd(readings, ii, 8);
        const __m256d rj = _mm256_i32gather_pd(readings, jj, 8);
        const __m256d diff = abs_pd(_mm256_sub_pd(ri, rj));
        const int mask =
            _mm256_movemask_pd(_mm256_cmp_pd(diff, vtheta, _CMP_GT_OQ));
        out[k + 0] = static_cast<uint8_t>(mask & 1);
        out[k + 1] = static_cast<uint8_t>((mask >> 1) & 1);
        out[k + 2] = static_cast<uint8_t>((mask >> 2) & 1);
        out[k + 3] = static_cast<uint8_t>((mask >> 3) & 1);
    }
    scalar::classify_edges(readings, ei + k, ej + k, m - k, theta, out + k);
}

} // namespace boundnet::kernels::avx2

#endif // BOUNDNET_HAVE_AVX2
