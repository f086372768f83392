#include "annustitch/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace annustitch {

bool image_valid(const GrayImage& img) {
    if (img.width <= 0 || img.height <= 0) return false;
    if (img.pixels.size() != static_cast<std::size_t>(img.width) * img.height) return false;
    return std::all_of(img.pixels.begin(), img.pixels.end(), [](float v) {
        return std::isfinite(v) && v >= 0.0f && v <= 255.0f;
    });
}

std::vector<std::uint8_t> quantize8(const GrayImage& img) {
    std::vector<std::uint8_t> out(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const float v = std::clamp(img.pixels[i], 0.0f, 255.0f);
        out[i] = static_cast<std::uint8_t>(std::lround(v));
    }
    return out;
}

GrayImage quantized(const GrayImage& img) {
    GrayImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const float v = std::clamp(img.pixels[i], 0.0f, 255.0f);
        out.pixels[i] = static_cast<float>(std::lround(v));
    }
    return out;
}

std::size_t BinaryMask::count() const {
    return static_cast<std::size_t>(
        std::accumulate(values.begin(), values.end(), std::size_t{0},
                        [](std::size_t acc, std::uint8_t v) { return acc + (v ? 1 : 0); }));
}

} // namespace annustitch
