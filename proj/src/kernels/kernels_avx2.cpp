#include "annustitch/kernels.hpp"

#if defined(ANNUSTITCH_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "kernels_detail.hpp"

namespace annustitch::kernels::avx2 {

namespace {

inline float hsum256(__m256 v) {
    const __m128 lo = _mm256_castps256_ps128(v);
    const __m128 hi = _mm256_extractf128_ps(v, 1);
    __m128 s = _mm_add_ps(lo, hi);
    s = _mm_add_ps(s, _mm_movehl_ps(s, s));
    s = _mm_add_ss(s, _mm_shuffle_ps(s, s, 0x55));
    return _mm_cvtss_f32(s);
}

} // namespace

void conv_horiz(const float* src, float* dst, int width, int height,
                const float* taps, int radius) {
    const int ntaps = 2 * radius + 1;
    const int vec_begin = radius;
    const int vec_end = width - radius; // exclusive; lanes in [vec_begin, vec_end) need no clamp
    for (int y = 0; y < height; ++y) {
        const float* srow = src + static_cast<std::size_t>(y) * width;
        float* drow = dst + static_cast<std::size_t>(y) * width;
        int x = 0;
        for (; x < vec_begin && x < width; ++x) {
            drow[x] = detail::conv_h_point(srow, width, x, taps, radius);
        }
        for (; x + 8 <= vec_end; x += 8) {
            __m256 acc = _mm256_mul_ps(_mm256_set1_ps(taps[0]),
                                       _mm256_loadu_ps(srow + x - radius));
            for (int k = 1; k < ntaps; ++k) {
                acc = _mm256_fmadd_ps(_mm256_set1_ps(taps[k]),
                                      _mm256_loadu_ps(srow + x - radius + k), acc);
            }
            _mm256_storeu_ps(drow + x, acc);
        }
        for (; x < width; ++x) {
            drow[x] = detail::conv_h_point(srow, width, x, taps, radius);
        }
    }
}

void conv_vert(const float* src, float* dst, int width, int height,
               const float* taps, int radius) {
    const int ntaps = 2 * radius + 1;
    for (int y = 0; y < height; ++y) {
        float* drow = dst + static_cast<std::size_t>(y) * width;
        const float* row0 =
            src + static_cast<std::size_t>(detail::clamp_index(y - radius, height)) * width;
        int x = 0;
        for (; x + 8 <= width; x += 8) {
            __m256 acc = _mm256_mul_ps(_mm256_set1_ps(taps[0]), _mm256_loadu_ps(row0 + x));
            for (int k = 1; k < ntaps; ++k) {
                const float* rowk =
                    src + static_cast<std::size_t>(detail::clamp_index(y - radius + k, height)) * width;
                acc = _mm256_fmadd_ps(_mm256_set1_ps(taps[k]), _mm256_loadu_ps(rowk + x), acc);
            }
            _mm256_storeu_ps(drow + x, acc);
        }
        for (; x < width; ++x) {
            drow[x] = detail::conv_v_point(src, width, height, x, y, taps, radius);
        }
    }
}

void bilinear_gather(const float* img, int width, int height,
                     const float* xs, const float* ys, float* out,
                     std::size_t n, float fill) {
    const __m256 zero = _mm256_setzero_ps();
    const __m256 xmax = _mm256_set1_ps(static_cast<float>(width - 1));
    const __m256 ymax = _mm256_set1_ps(static_cast<float>(height - 1));
    const __m256i ixmax = _mm256_set1_epi32(width - 1);
    const __m256i iymax = _mm256_set1_epi32(height - 1);
    const __m256i izero = _mm256_setzero_si256();
    const __m256i ione = _mm256_set1_epi32(1);
    const __m256i iwidth = _mm256_set1_epi32(width);
    const __m256 vfill = _mm256_set1_ps(fill);

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 x = _mm256_loadu_ps(xs + i);
        const __m256 y = _mm256_loadu_ps(ys + i);
        // ordered comparisons: NaN lanes come out invalid, matching the scalar path
        const __m256 valid = _mm256_and_ps(
            _mm256_and_ps(_mm256_cmp_ps(x, zero, _CMP_GE_OQ), _mm256_cmp_ps(x, xmax, _CMP_LE_OQ)),
            _mm256_and_ps(_mm256_cmp_ps(y, zero, _CMP_GE_OQ), _mm256_cmp_ps(y, ymax, _CMP_LE_OQ)));

        const __m256 xf = _mm256_floor_ps(x);
        const __m256 yf = _mm256_floor_ps(y);
        const __m256 fx = _mm256_sub_ps(x, xf);
        const __m256 fy = _mm256_sub_ps(y, yf);

        // clamp indices so invalid lanes still gather in-bounds (result masked out)
        __m256i x0 = _mm256_cvttps_epi32(xf);
        __m256i y0 = _mm256_cvttps_epi32(yf);
        x0 = _mm256_min_epi32(_mm256_max_epi32(x0, izero), ixmax);
        y0 = _mm256_min_epi32(_mm256_max_epi32(y0, izero), iymax);
        const __m256i x1 = _mm256_min_epi32(_mm256_add_epi32(x0, ione), ixmax);
        const __m256i y1 = _mm256_min_epi32(_mm256_add_epi32(y0, ione), iymax);

        const __m256i row0 = _mm256_mullo_epi32(y0, iwidth);
        const __m256i row1 = _mm256_mullo_epi32(y1, iwidth);
        const __m256 p00 = _mm256_i32gather_ps(img, _mm256_add_epi32(row0, x0), 4);
        const __m256 p01 = _mm256_i32gather_ps(img, _mm256_add_epi32(row0, x1), 4);
        const __m256 p10 = _mm256_i32gather_ps(img, _mm256_add_epi32(row1, x0), 4);
        const __m256 p11 = _mm256_i32gather_ps(img, _mm256_add_epi32(row1, x1), 4);

        const __m256 top = _mm256_fmadd_ps(fx, _mm256_sub_ps(p01, p00), p00);
        const __m256 bot = _mm256_fmadd_ps(fx, _mm256_sub_ps(p11, p10), p10);
        const __m256 val = _mm256_fmadd_ps(fy, _mm256_sub_ps(bot, top), top);
        _mm256_storeu_ps(out + i, _mm256_blendv_ps(vfill, val, valid));
    }
    for (; i < n; ++i) {
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
        __m256 acc0 = _mm256_setzero_ps();
        __m256 acc1 = _mm256_setzero_ps();
        std::size_t j = 0;
        for (; j + 16 <= dim; j += 16) {
            const __m256 d0 = _mm256_sub_ps(_mm256_loadu_ps(query + j), _mm256_loadu_ps(v + j));
            const __m256 d1 =
                _mm256_sub_ps(_mm256_loadu_ps(query + j + 8), _mm256_loadu_ps(v + j + 8));
            acc0 = _mm256_fmadd_ps(d0, d0, acc0);
            acc1 = _mm256_fmadd_ps(d1, d1, acc1);
        }
        for (; j + 8 <= dim; j += 8) {
            const __m256 d0 = _mm256_sub_ps(_mm256_loadu_ps(query + j), _mm256_loadu_ps(v + j));
            acc0 = _mm256_fmadd_ps(d0, d0, acc0);
        }
        float acc = hsum256(_mm256_add_ps(acc0, acc1));
        for (; j < dim; ++j) {
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

} // namespace annustitch::kernels::avx2

#endif // ANNUSTITCH_HAVE_AVX2
