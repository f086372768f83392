#include "annustitch/kernels.hpp"

#include <cmath>
#include <limits>

#include "kernels_detail.hpp"

namespace annustitch::kernels::scalar {

void conv_horiz(const float* src, float* dst, int width, int height,
                const float* taps, int radius) {
    for (int y = 0; y < height; ++y) {
        const float* srow = src + static_cast<std::size_t>(y) * width;
        float* drow = dst + static_cast<std::size_t>(y) * width;
        for (int x = 0; x < width; ++x) {
            drow[x] = detail::conv_h_point(srow, width, x, taps, radius);
        }
    }
}

void conv_vert(const float* src, float* dst, int width, int height,
               const float* taps, int radius) {
    for (int y = 0; y < height; ++y) {
        float* drow = dst + static_cast<std::size_t>(y) * width;
        for (int x = 0; x < width; ++x) {
            drow[x] = detail::conv_v_point(src, width, height, x, y, taps, radius);
        }
    }
}

void bilinear_gather(const float* img, int width, int height,
                     const float* xs, const float* ys, float* out,
                     std::size_t n, float fill) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = detail::bilinear_point(img, width, height, xs[i], ys[i], fill);
    }
}

Nearest2 nearest2_l2(const float* query, const float* db,
                     std::size_t count, std::size_t dim) {
    Nearest2 result;
    float best = std::numeric_limits<float>::infinity();
    float second = std::numeric_limits<float>::infinity();
    int best_index = -1;
    for (std::size_t r = 0; r < count; ++r) {
        const float* v = db + r * dim;
        float acc = 0.0f;
        for (std::size_t j = 0; j < dim; ++j) {
            const float d = query[j] - v[j];
            acc = std::fma(d, d, acc);
        }
        if (acc < best) {
            second = best;
            best = acc;
            best_index = static_cast<int>(r);
        } else if (acc < second) {
            second = acc;
        }
    }
    result.best_index = best_index;
    result.best_dist_sq = best_index < 0 ? 0.0f : best;
    result.second_dist_sq = count < 2 ? result.best_dist_sq : second;
    return result;
}

} // namespace annustitch::kernels::scalar
