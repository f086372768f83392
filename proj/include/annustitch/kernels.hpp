#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops of the pipeline. Every kernel exists in a scalar
// reference form and, on x86-64, an AVX2 form; the dispatched entry points
// below route to whichever backend is active. conv_* and bilinear_gather are
// written so the two backends agree bit-for-bit (same per-element operation
// order, fused multiply-add in both); nearest2_l2 reduces in a different
// order per backend and agrees to float tolerance only.

namespace annustitch::kernels {

enum class Backend {
    Scalar,
    Avx2,
};

/// Picks the widest backend the running CPU supports.
void select_backend_auto();

/// Forces a backend; returns false (and leaves the selection unchanged)
/// when the CPU or build lacks it.
bool select_backend(Backend backend);

Backend active_backend();
const char* backend_name(Backend backend);
bool avx2_available();

struct Nearest2 {
    int best_index = -1;
    float best_dist_sq = 0.0f;
    float second_dist_sq = 0.0f; // = best when count < 2
};

// Dispatched entry points -----------------------------------------------

/// 1D horizontal convolution with replicate borders. taps has 2*radius+1
/// entries; src and dst are width*height row-major and must not alias.
void conv_horiz(const float* src, float* dst, int width, int height,
                const float* taps, int radius);

/// Vertical counterpart of conv_horiz.
void conv_vert(const float* src, float* dst, int width, int height,
               const float* taps, int radius);

/// Bilinear samples img at n floating-point coordinate pairs. Coordinates
/// outside [0, width-1] x [0, height-1] produce `fill`.
void bilinear_gather(const float* img, int width, int height,
                     const float* xs, const float* ys, float* out,
                     std::size_t n, float fill);

/// Best and second-best squared Euclidean distance between query and the
/// rows of db (count x dim). Ties keep the earlier row.
Nearest2 nearest2_l2(const float* query, const float* db,
                     std::size_t count, std::size_t dim);

// Per-backend entry points, used by the equivalence tests ----------------

namespace scalar {
void conv_horiz(const float* src, float* dst, int width, int height,
                const float* taps, int radius);
void conv_vert(const float* src, float* dst, int width, int height,
               const float* taps, int radius);
void bilinear_gather(const float* img, int width, int height,
                     const float* xs, const float* ys, float* out,
                     std::size_t n, float fill);
Nearest2 nearest2_l2(const float* query, const float* db,
                     std::size_t count, std::size_t dim);
} // namespace scalar

#if defined(ANNUSTITCH_HAVE_AVX2)
namespace avx2 {
void conv_horiz(const float* src, float* dst, int width, int height,
                const float* taps, int radius);
void conv_vert(const float* src, float* dst, int width, int height,
               const float* taps, int radius);
void bilinear_gather(const float* img, int width, int height,
                     const float* xs, const float* ys, float* out,
                     std::size_t n, float fill);
Nearest2 nearest2_l2(const float* query, const float* db,
                     std::size_t count, std::size_t dim);
} // namespace avx2
#endif

} // namespace annustitch::kernels
