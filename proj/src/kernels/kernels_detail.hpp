#pragma once

#include <algorithm>
#include <cmath>

// Per-element reference formulas shared by the scalar backend and the
// border/tail paths of the AVX2 backend. Keeping one definition is what
// makes conv_* and bilinear_gather bit-identical across backends: both
// evaluate taps in the same order and fuse with fma exactly where the
// vector code uses fmadd.

namespace annustitch::kernels::detail {

inline int clamp_index(int i, int n) {
    return i < 0 ? 0 : (i >= n ? n - 1 : i);
}

inline float conv_h_point(const float* row, int width, int x,
                          const float* taps, int radius) {
    const int ntaps = 2 * radius + 1;
    float acc = taps[0] * row[clamp_index(x - radius, width)];
    for (int k = 1; k < ntaps; ++k) {
        acc = std::fma(taps[k], row[clamp_index(x - radius + k, width)], acc);
    }
    return acc;
}

inline float conv_v_point(const float* src, int width, int height, int x, int y,
                          const float* taps, int radius) {
    const int ntaps = 2 * radius + 1;
    const float* row0 = src + static_cast<std::size_t>(clamp_index(y - radius, height)) * width;
    float acc = taps[0] * row0[x];
    for (int k = 1; k < ntaps; ++k) {
        const float* rowk = src + static_cast<std::size_t>(clamp_index(y - radius + k, height)) * width;
        acc = std::fma(taps[k], rowk[x], acc);
    }
    return acc;
}

inline float bilinear_point(const float* img, int width, int height,
                            float x, float y, float fill) {
    if (!(x >= 0.0f && x <= static_cast<float>(width - 1) &&
          y >= 0.0f && y <= static_cast<float>(height - 1))) {
        return fill; // also catches NaN coordinates
    }
    const float xf = std::floor(x);
    const float yf = std::floor(y);
    const int x0 = static_cast<int>(xf);
    const int y0 = static_cast<int>(yf);
    const int x1 = std::min(x0 + 1, width - 1);
    const int y1 = std::min(y0 + 1, height - 1);
    const float fx = x - xf;
    const float fy = y - yf;
    const float p00 = img[static_cast<std::size_t>(y0) * width + x0];
    const float p01 = img[static_cast<std::size_t>(y0) * width + x1];
    const float p10 = img[static_cast<std::size_t>(y1) * width + x0];
    const float p11 = img[static_cast<std::size_t>(y1) * width + x1];
    const float top = std::fma(fx, p01 - p00, p00);
    const float bot = std::fma(fx, p11 - p10, p10);
    return std::fma(fy, bot - top, top);
}

} // namespace annustitch::kernels::detail
