#include "annustitch/kernels.hpp"

#include <atomic>

namespace annustitch::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(ANNUSTITCH_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect() {
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect()};
    return slot;
}

} // namespace

bool avx2_available() { return cpu_has_avx2(); }

void select_backend_auto() { backend_slot().store(detect()); }

bool select_backend(Backend backend) {
    if (backend == Backend::Avx2 && !cpu_has_avx2()) return false;
    backend_slot().store(backend);
    return true;
}

Backend active_backend() { return backend_slot().load(); }

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

void conv_horiz(const float* src, float* dst, int width, int height,
                const float* taps, int radius) {
#if defined(ANNUSTITCH_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        avx2::conv_horiz(src, dst, width, height, taps, radius);
        return;
    }
#endif
    scalar::conv_horiz(src, dst, width, height, taps, radius);
}

void conv_vert(const float* src, float* dst, int width, int height,
               const float* taps, int radius) {
#if defined(ANNUSTITCH_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        avx2::conv_vert(src, dst, width, height, taps, radius);
        return;
    }
#endif
    scalar::conv_vert(src, dst, width, height, taps, radius);
}

void bilinear_gather(const float* img, int width, int height,
                     const float* xs, const float* ys, float* out,
                     std::size_t n, float fill) {
#if defined(ANNUSTITCH_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        avx2::bilinear_gather(img, width, height, xs, ys, out, n, fill);
        return;
    }
#endif
    scalar::bilinear_gather(img, width, height, xs, ys, out, n, fill);
}

Nearest2 nearest2_l2(const float* query, const float* db,
                     std::size_t count, std::size_t dim) {
#if defined(ANNUSTITCH_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        return avx2::nearest2_l2(query, db, count, dim);
    }
#endif
    return scalar::nearest2_l2(query, db, count, dim);
}

} // namespace annustitch::kernels
