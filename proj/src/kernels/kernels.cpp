#include "boundnet/kernels/kernels.hpp"

namespace boundnet::kernels {

namespace {

struct Table {
    void (*sample_halfplane)(const double*, const double*, std::size_t, double,
                             double, double, double, double, double*);
    void (*sample_disk)(const double*, const double*, std::size_t, double,
                        double, double, double, double, double*);
    void (*scale)(const double*, std::size_t, double, double*);
    void (*classify_edges)(const double*, const int32_t*, const int32_t*,
                           std::size_t, double, uint8_t*);
};

constexpr Table kScalarTable = {scalar::sample_halfplane, scalar::sample_disk,
                                scalar::scale, scalar::classify_edges};

#if defined(BOUNDNET_HAVE_AVX2)
constexpr Table kAvx2Table = {avx2::sample_halfplane, avx2::sample_disk,
                              avx2::scale, avx2::classify_edges};
#endif

Backend g_backend = Backend::Auto;
const Table* g_table = nullptr;
Backend g_resolved = Backend::Scalar;

void resolve() {
#if defined(BOUNDNET_HAVE_AVX2)
    const bool want_avx2 = g_backend == Backend::Avx2 ||
                           (g_backend == Backend::Auto && cpu_has_avx2());
    if (want_avx2 && cpu_has_avx2()) {
        g_table = &kAvx2Table;
        g_resolved = Backend::Avx2;
        return;
    }
#endif
    g_table = &kScalarTable;
    g_resolved = Backend::Scalar;
}

const Table& table() {
    if (g_table == nullptr) resolve();
    return *g_table;
}

} // namespace

bool cpu_has_avx2() {
#if defined(BOUNDNET_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() {
    table();
    return g_resolved;
}

void set_backend(Backend b) {
    g_backend = b;
    resolve();
}

void sample_halfplane(const double* xs, const double* ys, std::size_t n,
                      double nx, double ny, double offset,
                      double v_in, double v_out, double* out) {
    table().sample_halfplane(xs, ys, n, nx, ny, offset, v_in, v_out, out);
}

void sample_disk(const double* xs, const double* ys, std::size_t n,
                 double cx, double cy, double r2,
                 double v_in, double v_out, double* out) {
    table().sample_disk(xs, ys, n, cx, cy, r2, v_in, v_out, out);
}

void scale(const double* vals, std::size_t n, double s, double* out) {
    table().scale(vals, n, s, out);
}

void classify_edges(const double* readings, const int32_t* ei,
                    const int32_t* ej, std::size_t m, double theta,
                    uint8_t* out) {
    table().classify_edges(readings, ei, ej, m, theta, out);
}

} // namespace boundnet::kernels
