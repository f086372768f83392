#pragma once

#include <cstdint>
#include <vector>

namespace annustitch {

/// 2D intensity raster, the currency between all pipeline stages.
/// Values live in [0, 255] and are kept as float so intermediate stages
/// (rotation, unwrapping, equalization) do not quantize until a strip is
/// written to disk.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<float> pixels; // row-major, size = width * height

    GrayImage() = default;
    GrayImage(int w, int h, float fill = 0.0f)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    float& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    float at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    const float* row(int y) const { return pixels.data() + static_cast<std::size_t>(y) * width; }
    float* row(int y) { return pixels.data() + static_cast<std::size_t>(y) * width; }

    std::size_t size() const { return pixels.size(); }
    bool empty() const { return pixels.empty(); }

    bool same_size(const GrayImage& other) const {
        return width == other.width && height == other.height;
    }
};

/// True iff dimensions are positive, the buffer matches them, and every
/// value is finite and within [0, 255].
bool image_valid(const GrayImage& img);

/// Round-to-nearest 8-bit quantization, the canonical on-disk representation.
std::vector<std::uint8_t> quantize8(const GrayImage& img);

/// Snaps every pixel to its quantize8 value (keeps float storage). Pipeline
/// stages that may pass strips either in memory or through PNG files apply
/// this so both routes see identical data.
GrayImage quantized(const GrayImage& img);

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values; // 0 or 1, row-major

    BinaryMask() = default;
    BinaryMask(int w, int h) : width(w), height(h), values(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, bool v) { values[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }

    std::size_t count() const;
};

struct Point2i {
    int x = 0;
    int y = 0;
    bool operator==(const Point2i&) const = default;
};

struct Point2d {
    double x = 0.0;
    double y = 0.0;
};

} // namespace annustitch
